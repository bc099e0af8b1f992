//! Regeneration of the published benchmark tables and figure series.
//!
//! Every embedded row is recomputed with both the closed-form ansatz and the
//! numerical oracle. Pass/fail is judged against an independent column where
//! one exists:
//!
//! | table | potential | units | gated column | ansatz tol | oracle tol |
//! |-------|-----------|-------|--------------|------------|------------|
//! | 1 | VHP `a=1, b=-1, c=4, d=-4` | ħ = 2μ = 1 | none (trends only) | - | - |
//! | 2 | Hellmann `c=2, d=-1` | ħ = 2μ = 1 | ref20 | 1e-3 | 1e-3 |
//! | 3 | Varshni `a=b=-1` | ħ = 2μ = 1 | printed E | 1e-4 | - |
//! | 4 | Yukawa `d=-√2, α=g√2` | ħ = μ = 1 | ref23 | 2e-3 | 1e-3 |
//!
//! Suspect rows are reported but never gated.

mod figures;
mod reference;
mod report;

pub use figures::{figure_data, FigureId, FigureSeries};
pub use reference::{reference_rows, table_rows, Printed, RefSource, ReferenceRow, TableId};
pub use report::{parse_report_csv, render_report, ReportFormat};

use crate::ansatz::{ansatz_energy, QuantumNumbers};
use crate::exec::Execution;
use crate::oracle;
use crate::potentials::{PotentialForm, PotentialParams};
use crate::Result;

pub const TABLE1_ALPHAS: [f64; 3] = [0.025, 0.05, 0.075];
pub const TREND_MASSES: [f64; 3] = [0.5, 1.0, 2.0];

/// What a table's rows are compared against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    /// Only table-level trend checks apply.
    None,
    /// The table's own printed E column.
    Printed,
    Reference(RefSource),
}

/// Parameter set, comparison columns and tolerances of one table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableSetup {
    pub id: TableId,
    pub ref_columns: &'static [RefSource],
    pub target: Target,
    pub ansatz_tol: Option<f64>,
    pub oracle_tol: Option<f64>,
}

impl TableSetup {
    pub fn for_table(id: TableId) -> Self {
        match id {
            TableId::Vhp => Self {
                id,
                ref_columns: &[],
                target: Target::None,
                ansatz_tol: None,
                oracle_tol: None,
            },
            TableId::Hellmann => Self {
                id,
                ref_columns: &[RefSource::Ref21, RefSource::Ref20],
                target: Target::Reference(RefSource::Ref20),
                ansatz_tol: Some(1e-3),
                oracle_tol: Some(1e-3),
            },
            TableId::Varshni => Self {
                id,
                ref_columns: &[RefSource::Ref19],
                target: Target::Printed,
                ansatz_tol: Some(1e-4),
                oracle_tol: None,
            },
            TableId::Yukawa => Self {
                id,
                ref_columns: &[RefSource::Ref23, RefSource::Ref22],
                target: Target::Reference(RefSource::Ref23),
                ansatz_tol: Some(2e-3),
                oracle_tol: Some(1e-3),
            },
        }
    }

    /// Potential for a row whose first column reads `key`.
    pub fn params(&self, key: f64) -> Result<PotentialParams> {
        match self.id {
            TableId::Vhp => PotentialParams::new(1.0, -1.0, 4.0, -4.0, key, 0.5, 1.0),
            TableId::Hellmann => PotentialParams::hellmann(2.0, -1.0, key),
            TableId::Varshni => PotentialParams::varshni(-1.0, -1.0, key),
            TableId::Yukawa => PotentialParams::yukawa(2f64.sqrt(), key)?.with_mass(1.0),
        }
    }

    /// Name of the first column in rendered reports.
    pub fn key_name(&self) -> &'static str {
        match self.id {
            TableId::Yukawa => "g",
            _ => "alpha",
        }
    }

    /// Deviation columns: the table's own E column, then each reference column.
    pub fn deviation_columns(&self) -> Vec<&'static str> {
        std::iter::once("paper")
            .chain(self.ref_columns.iter().map(|r| r.tag()))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub reference: ReferenceRow,
    pub alpha: f64,
    pub e_ansatz: Option<f64>,
    pub e_oracle: Option<f64>,
    /// `|e_ansatz - column|` in [`TableSetup::deviation_columns`] order.
    pub dev_ansatz: Vec<Option<f64>>,
    pub dev_oracle: Vec<Option<f64>>,
    pub extrapolated: bool,
    /// Why the oracle produced no level, if it did not.
    pub oracle_note: Option<String>,
    /// `None` for rows that are not gated.
    pub passed: Option<bool>,
}

impl ComparisonRow {
    pub fn flags(&self) -> Vec<&'static str> {
        let mut flags = Vec::new();
        if self.reference.suspect {
            flags.push("suspect");
        }
        if self.extrapolated {
            flags.push("extrapolated");
        }
        if self.e_oracle.is_none() {
            flags.push("no-oracle");
        }
        if self.passed == Some(false) {
            flags.push("fail");
        }
        flags
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColumnSummary {
    pub column: String,
    pub max_abs: f64,
    pub mean_abs: f64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrendCheck {
    pub description: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub setup: TableSetup,
    pub rows: Vec<ComparisonRow>,
    /// Deviation statistics over non-suspect rows.
    pub summary: Vec<ColumnSummary>,
    pub trends: Vec<TrendCheck>,
}

impl ComparisonReport {
    pub fn empty(id: TableId) -> Self {
        Self {
            setup: TableSetup::for_table(id),
            rows: Vec::new(),
            summary: Vec::new(),
            trends: Vec::new(),
        }
    }

    /// All gated rows and all trend checks pass.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed != Some(false)) && self.trends.iter().all(|t| t.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ComparisonRow> {
        self.rows.iter().filter(|r| r.passed == Some(false))
    }
}

/// Recomputes every row of `id` with both methods.
pub fn run_table(id: TableId, exec: Execution) -> Result<ComparisonReport> {
    let setup = TableSetup::for_table(id);
    let references = table_rows(id)?;
    let rows = exec
        .map(&references, |row| compare_row(&setup, row))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let summary = summarize(&setup, &rows);
    let trends = match id {
        TableId::Vhp => table1_trends(&rows)?,
        _ => Vec::new(),
    };
    Ok(ComparisonReport {
        setup,
        rows,
        summary,
        trends,
    })
}

fn compare_row(setup: &TableSetup, reference: &ReferenceRow) -> Result<ComparisonRow> {
    let params = setup.params(reference.key.value)?;
    let qn = reference.qn;
    let (e_ansatz, extrapolated) = match ansatz_energy(&params, qn) {
        Ok(level) => (Some(level.value), level.extrapolated),
        Err(_) => (None, qn.n >= 2),
    };
    let (e_oracle, oracle_note) = match oracle::solve(&params, qn, PotentialForm::Full) {
        Ok(res) => (Some(res.level.value), None),
        Err(e) => (None, Some(e.to_string())),
    };

    let columns: Vec<Option<f64>> = std::iter::once(Some(reference.e_paper.value))
        .chain(setup.ref_columns.iter().map(|&s| reference.reference(s)))
        .collect();
    let deviations = |e: Option<f64>| -> Vec<Option<f64>> {
        columns.iter().map(|c| Some((e? - (*c)?).abs())).collect()
    };

    let target = match setup.target {
        Target::None => None,
        Target::Printed => Some(reference.e_paper.value),
        Target::Reference(source) => reference.reference(source),
    };
    let within = |e: Option<f64>, tol: Option<f64>, target: f64| match tol {
        None => true,
        Some(tol) => e.is_some_and(|e| (e - target).abs() < tol),
    };
    let passed = match target {
        Some(t) if !reference.suspect => {
            Some(within(e_ansatz, setup.ansatz_tol, t) && within(e_oracle, setup.oracle_tol, t))
        }
        _ => None,
    };

    Ok(ComparisonRow {
        reference: reference.clone(),
        alpha: params.alpha,
        e_ansatz,
        e_oracle,
        dev_ansatz: deviations(e_ansatz),
        dev_oracle: deviations(e_oracle),
        extrapolated,
        oracle_note,
        passed,
    })
}

fn summarize(setup: &TableSetup, rows: &[ComparisonRow]) -> Vec<ColumnSummary> {
    let trusted: Vec<&ComparisonRow> = rows.iter().filter(|r| !r.reference.suspect).collect();
    let mut out = Vec::new();
    for (method, pick) in [
        (
            "ansatz",
            (|r: &ComparisonRow| r.dev_ansatz.clone()) as fn(&ComparisonRow) -> Vec<Option<f64>>,
        ),
        ("oracle", |r: &ComparisonRow| r.dev_oracle.clone()),
    ] {
        for (j, column) in setup.deviation_columns().iter().enumerate() {
            let devs: Vec<f64> = trusted.iter().filter_map(|r| pick(r)[j]).collect();
            if devs.is_empty() {
                continue;
            }
            out.push(ColumnSummary {
                column: format!("dev_{method}_{column}"),
                max_abs: devs.iter().copied().fold(0.0, f64::max),
                mean_abs: devs.iter().sum::<f64>() / devs.len() as f64,
                count: devs.len(),
            });
        }
    }
    out
}

fn strictly_decreasing(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[1] < w[0])
}

fn strictly_increasing(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[1] > w[0])
}

/// Binding-energy magnitude falls with `α` for every state; for `l > 0` the
/// energy rises with `α` and falls with `μ`.
fn table1_trends(rows: &[ComparisonRow]) -> Result<Vec<TrendCheck>> {
    let setup = TableSetup::for_table(TableId::Vhp);
    let mut states: Vec<&str> = Vec::new();
    for r in rows {
        if !states.contains(&r.reference.state.as_str()) {
            states.push(&r.reference.state);
        }
    }

    let mut checks = Vec::new();
    for state in states {
        let series: Vec<&ComparisonRow> =
            rows.iter().filter(|r| r.reference.state == state).collect();
        let energies: Option<Vec<f64>> = series.iter().map(|r| r.e_ansatz).collect();
        let qn = series[0].reference.qn;
        let Some(energies) = energies else {
            checks.push(TrendCheck {
                description: format!("{state}: ansatz energy available"),
                passed: false,
            });
            continue;
        };
        let magnitudes: Vec<f64> = energies.iter().map(|e| e.abs()).collect();
        checks.push(TrendCheck {
            description: format!("{state}: |E| strictly decreasing in alpha"),
            passed: strictly_decreasing(&magnitudes),
        });
        if qn.l > 0 {
            checks.push(TrendCheck {
                description: format!("{state}: E strictly increasing in alpha"),
                passed: strictly_increasing(&energies),
            });
            for r in &series {
                let by_mass = TREND_MASSES
                    .iter()
                    .map(|&mu| {
                        let p = setup.params(r.reference.key.value)?.with_mass(mu)?;
                        Ok(ansatz_energy(&p, qn)?.value)
                    })
                    .collect::<Result<Vec<f64>>>()?;
                checks.push(TrendCheck {
                    description: format!(
                        "{state}: E strictly decreasing in mu at alpha={}",
                        r.reference.key.text
                    ),
                    passed: strictly_decreasing(&by_mass),
                });
            }
        }
    }
    Ok(checks)
}

/// Quantum numbers covered by the figure series (`n = 0`, `l = 0, 1, 2`).
pub(crate) fn figure_states() -> [QuantumNumbers; 3] {
    [
        QuantumNumbers::new(0, 0),
        QuantumNumbers::new(0, 1),
        QuantumNumbers::new(0, 2),
    ]
}
