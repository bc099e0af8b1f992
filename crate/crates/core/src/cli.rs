//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 tolerance failure, 2 usage, 3 solver failure, 4 I/O.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::ansatz::{ansatz_energy, ansatz_wavefunction, match_coefficients, QuantumNumbers};
use crate::benchmarks::{figure_data, render_report, run_table, FigureId, ReportFormat, TableId};
use crate::exec::Execution;
use crate::oracle::{self, RadialGrid, SolverConfig};
use crate::potentials::{PotentialForm, PotentialParams};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_TOLERANCE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_IO: i32 = 4;

const DEFAULT_MU: f64 = 0.5;
const DEFAULT_HBAR: f64 = 1.0;

#[derive(Debug, Parser)]
#[command(
    name = "vhp",
    version,
    about = "Bound states of the Varshni-Hellmann potential V(r) = a + (d - ab) e^(-alpha r)/r - c/r",
    after_help = "Defaults follow the hbar = 2mu = 1 convention (mu = 0.5, hbar = 1).\n\
                  Exit codes: 0 ok, 1 tolerance failure, 2 usage, 3 solver failure, 4 I/O."
)]
struct Cli {
    /// Plain-text file of `key = value` lines using the long flag names;
    /// flags given on the command line take precedence
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy of one state from the closed form and/or the numerical solver
    Energy(EnergyArgs),
    /// Regenerate a benchmark table (exit 1 if a gated row misses its tolerance)
    Table(TableArgs),
    /// Emit the data behind a figure as long-format CSV (series_label,x,y)
    Figure(FigureArgs),
    /// Ground-state reduced wavefunction u(r) from both methods as CSV
    Wavefunction(WavefunctionArgs),
}

#[derive(Debug, Clone, Default, Args)]
struct PotentialArgs {
    /// Constant offset [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    /// Varshni strength [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    /// Coulomb strength (required)
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    /// Yukawa strength, negative is attractive [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    d: Option<f64>,
    /// Screening parameter [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Reduced mass [default: 0.5]
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Reduced Planck constant [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    hbar: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodChoice {
    Ansatz,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormChoice {
    Full,
    Expanded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatChoice {
    Csv,
    Md,
}

#[derive(Debug, Args)]
struct EnergyArgs {
    #[command(flatten)]
    potential: PotentialArgs,
    /// Radial node count [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    n: Option<u32>,
    /// Orbital quantum number [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    l: Option<u32>,
    /// [default: both]
    #[arg(long, value_enum)]
    method: Option<MethodChoice>,
    /// Potential form used by the oracle [default: full]
    #[arg(long, value_enum)]
    form: Option<FormChoice>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Table number, 1-4
    #[arg(long)]
    id: Option<u8>,
    /// [default: csv]
    #[arg(long, value_enum)]
    format: Option<FormatChoice>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FigureArgs {
    /// Figure number, 1-3
    #[arg(long)]
    id: Option<u8>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct WavefunctionArgs {
    #[command(flatten)]
    potential: PotentialArgs,
    /// Orbital quantum number [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    l: Option<u32>,
    /// Innermost grid point [default: automatic]
    #[arg(long, allow_negative_numbers = true)]
    r_min: Option<f64>,
    /// Outermost grid point [default: automatic]
    #[arg(long, allow_negative_numbers = true)]
    r_max: Option<f64>,
    /// Number of grid points [default: automatic]
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Tolerance(String),
    Usage(String),
    Solver(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Tolerance(_) => EXIT_TOLERANCE,
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Solver(_) => EXIT_SOLVER,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Tolerance(m) | Failure::Usage(m) | Failure::Solver(m) | Failure::Io(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoBoundState { .. } | Error::ConvergenceFailure { .. } => {
                Failure::Solver(e.to_string())
            }
            Error::Io(_) => Failure::Io(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Runs the CLI against the process streams and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message());
            failure.code()
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Energy(args) => cmd_energy(args, &config, stdout),
        Command::Table(args) => cmd_table(args, &config, stdout),
        Command::Figure(args) => cmd_figure(args, &config, stdout),
        Command::Wavefunction(args) => cmd_wavefunction(args, &config, stdout),
    }
}

/// `key = value` settings read from `--config`.
#[derive(Debug, Default)]
struct Config {
    values: BTreeMap<String, String>,
}

const CONFIG_KEYS: &[&str] = &[
    "a", "b", "c", "d", "alpha", "mu", "hbar", "n", "l", "method", "form", "id", "format", "out",
    "r-min", "r-max", "points",
];

impl Config {
    fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn parse(text: &str) -> Result<Self, Failure> {
        let mut values = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Failure::Usage(format!("config line {}: expected key = value", lineno + 1))
            })?;
            let key = key.trim().trim_start_matches("--").replace('_', "-");
            if !CONFIG_KEYS.contains(&key.as_str()) {
                return Err(Failure::Usage(format!(
                    "config line {}: unknown key `{key}`",
                    lineno + 1
                )));
            }
            values.insert(key, value.trim().to_owned());
        }
        Ok(Self { values })
    }

    fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, Failure> {
        self.values
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Failure::Usage(format!("config: invalid value `{v}` for `{key}`")))
            })
            .transpose()
    }

    fn get_enum<T: ValueEnum>(&self, key: &str) -> Result<Option<T>, Failure> {
        self.values
            .get(key)
            .map(|v| {
                T::from_str(v, false).map_err(|e| Failure::Usage(format!("config: {key}: {e}")))
            })
            .transpose()
    }

    /// Flag value if given, else config value.
    fn merge<T: std::str::FromStr>(
        &self,
        flag: Option<T>,
        key: &str,
    ) -> Result<Option<T>, Failure> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.get(key),
        }
    }

    fn merge_enum<T: ValueEnum>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, Failure> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.get_enum(key),
        }
    }

    fn merge_path(&self, flag: Option<PathBuf>) -> Option<PathBuf> {
        flag.or_else(|| self.values.get("out").map(PathBuf::from))
    }
}

fn potential(args: &PotentialArgs, config: &Config) -> Result<PotentialParams, Failure> {
    let c = config
        .merge(args.c, "c")?
        .ok_or_else(|| Failure::Usage("missing required --c (Coulomb strength)".into()))?;
    let params = PotentialParams::new(
        config.merge(args.a, "a")?.unwrap_or(0.0),
        config.merge(args.b, "b")?.unwrap_or(0.0),
        c,
        config.merge(args.d, "d")?.unwrap_or(0.0),
        config.merge(args.alpha, "alpha")?.unwrap_or(0.0),
        config.merge(args.mu, "mu")?.unwrap_or(DEFAULT_MU),
        config.merge(args.hbar, "hbar")?.unwrap_or(DEFAULT_HBAR),
    )?;
    Ok(params)
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}"))),
    }
}

fn cmd_energy(args: EnergyArgs, config: &Config, stdout: &mut dyn Write) -> Result<(), Failure> {
    let params = potential(&args.potential, config)?;
    let qn = QuantumNumbers::new(
        config.merge(args.n, "n")?.unwrap_or(0),
        config.merge(args.l, "l")?.unwrap_or(0),
    );
    let method = config
        .merge_enum(args.method, "method")?
        .unwrap_or(MethodChoice::Both);
    let form = match config
        .merge_enum(args.form, "form")?
        .unwrap_or(FormChoice::Full)
    {
        FormChoice::Full => PotentialForm::Full,
        FormChoice::Expanded => PotentialForm::Expanded,
    };

    let mut text = String::new();
    if matches!(method, MethodChoice::Ansatz | MethodChoice::Both) {
        let level = ansatz_energy(&params, qn)?;
        let coeffs = match_coefficients(&params, qn)?;
        let _ = writeln!(text, "ansatz: {:.6}", level.value);
        let _ = writeln!(text, "ansatz residual: {:.6e}", coeffs.residual);
        if level.extrapolated {
            let _ = writeln!(
                text,
                "note: ansatz energy for n >= 2 follows the low-n pattern (extrapolated)"
            );
        }
    }
    if matches!(method, MethodChoice::Oracle | MethodChoice::Both) {
        let result = oracle::solve(&params, qn, form)?;
        let _ = writeln!(text, "oracle: {:.6}", result.level.value);
    }
    emit(config.merge_path(args.out).as_deref(), &text, stdout)
}

fn cmd_table(args: TableArgs, config: &Config, stdout: &mut dyn Write) -> Result<(), Failure> {
    let id = config
        .merge(args.id, "id")?
        .ok_or_else(|| Failure::Usage("missing required --id (1-4)".into()))?;
    let id = TableId::new(id)?;
    let format = match config
        .merge_enum(args.format, "format")?
        .unwrap_or(FormatChoice::Csv)
    {
        FormatChoice::Csv => ReportFormat::Csv,
        FormatChoice::Md => ReportFormat::Markdown,
    };
    let report = run_table(id, Execution::default())?;
    emit(
        config.merge_path(args.out).as_deref(),
        &render_report(&report, format),
        stdout,
    )?;
    if report.passed() {
        Ok(())
    } else {
        let failed: Vec<String> = report
            .failures()
            .map(|r| format!("{} @ {}", r.reference.state, r.reference.key.text))
            .chain(
                report
                    .trends
                    .iter()
                    .filter(|t| !t.passed)
                    .map(|t| t.description.clone()),
            )
            .collect();
        Err(Failure::Tolerance(format!(
            "table {id} outside tolerance: {}",
            failed.join(", ")
        )))
    }
}

fn cmd_figure(args: FigureArgs, config: &Config, stdout: &mut dyn Write) -> Result<(), Failure> {
    let id = config
        .merge(args.id, "id")?
        .ok_or_else(|| Failure::Usage("missing required --id (1-3)".into()))?;
    let series = figure_data(FigureId::new(id)?, Execution::default())?;
    let mut text = String::from("series_label,x,y\n");
    for s in &series {
        for (x, y) in &s.points {
            let _ = writeln!(text, "{},{x:.6},{y:.6}", s.label);
        }
    }
    emit(config.merge_path(args.out).as_deref(), &text, stdout)
}

fn cmd_wavefunction(
    args: WavefunctionArgs,
    config: &Config,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let params = potential(&args.potential, config)?;
    let qn = QuantumNumbers::new(0, config.merge(args.l, "l")?.unwrap_or(0));
    let r_min = config.merge(args.r_min, "r-min")?;
    let r_max = config.merge(args.r_max, "r-max")?;
    let points = config.merge(args.points, "points")?;

    let auto = oracle::solve(&params, qn, PotentialForm::Full)?;
    let solved = if r_min.is_none() && r_max.is_none() && points.is_none() {
        auto
    } else {
        let grid = RadialGrid::new(
            r_min.unwrap_or(auto.grid.r_min()),
            r_max.unwrap_or(auto.grid.r_max()),
            points.unwrap_or(auto.grid.num_points()),
        )?;
        let cfg = SolverConfig::default_for(&params, qn.l, PotentialForm::Full, &grid)?;
        oracle::solve_bound(&params, qn, PotentialForm::Full, &grid, &cfg)?
    };
    let ansatz = ansatz_wavefunction(&params, qn, &solved.u.grid)?;

    let mut text = String::new();
    if !ansatz.normalizable {
        let coeffs = match_coefficients(&params, qn)?;
        let _ = writeln!(
            text,
            "# warning: ansatz wavefunction is not normalizable (A = {:.6e}, B = {:.6e}); u_ansatz is unnormalized (N = 1)",
            coeffs.gauss, coeffs.linear
        );
    }
    text.push_str("r,u_ansatz,u_oracle\n");
    for ((r, ua), uo) in solved
        .u
        .grid
        .iter()
        .zip(&ansatz.values)
        .zip(&solved.u.values)
    {
        let _ = writeln!(text, "{r:.9e},{ua:.9e},{uo:.9e}");
    }
    emit(config.merge_path(args.out).as_deref(), &text, stdout)
}
