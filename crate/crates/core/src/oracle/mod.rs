//! Numerical bound-state solver for the radial equation
//!
//! ```text
//! u''(r) = (2μ/ħ²) [V(r) + l(l+1)ħ²/(2μr²) - E] u(r)
//! ```
//!
//! The solution regular at the origin is integrated outward with Numerov's
//! method and its sign changes are counted. By Sturm oscillation the count
//! jumps from `n` to `n + 1` exactly at the `n`-th eigenvalue, so bisection on
//! the count brackets the level. The returned wavefunction is stitched from
//! the outward solution and a stable inward solution at the outer classical
//! turning point.

mod numerov;

use crate::ansatz::{
    self, count_sign_changes, trapezoid_norm, EnergyLevel, Method, QuantumNumbers, RadialFunction,
};
use crate::exec::Execution;
use crate::potentials::{PotentialForm, PotentialParams};
use crate::{Error, Result};

use numerov::Tabulated;

pub const MIN_GRID_POINTS: usize = 1000;
pub const AUTO_R_MIN: f64 = 1e-6;
/// Decay lengths `1/κ` covered by [`auto_grid`].
pub const AUTO_DECAY_LENGTHS: f64 = 35.0;
/// Upper bound on `h·κ` used by [`auto_grid`].
pub const AUTO_STEP_KAPPA: f64 = 0.005;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    r_min: f64,
    r_max: f64,
    num_points: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, num_points: usize) -> Result<Self> {
        if !(r_min.is_finite() && r_max.is_finite() && r_min > 0.0 && r_max > r_min) {
            return Err(Error::Argument(format!(
                "grid needs 0 < r_min < r_max, got [{r_min}, {r_max}]"
            )));
        }
        if r_min > 1e-4 * r_max {
            return Err(Error::Argument(format!(
                "r_min = {r_min} must not exceed 1e-4 · r_max = {}",
                1e-4 * r_max
            )));
        }
        if num_points < MIN_GRID_POINTS {
            return Err(Error::Argument(format!(
                "grid needs at least {MIN_GRID_POINTS} points, got {num_points}"
            )));
        }
        Ok(Self {
            r_min,
            r_max,
            num_points,
        })
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.num_points - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.num_points {
            self.r_max
        } else {
            self.r_min + i as f64 * self.spacing()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.num_points).map(|i| self.point(i)).collect()
    }

    /// Same extent with twice as many points.
    pub fn refined(&self) -> Self {
        Self {
            num_points: 2 * self.num_points,
            ..*self
        }
    }

    /// Restricts the extent to `r <= 2/α` for the expanded potential, where
    /// the truncated series is still meaningful. Keeps the spacing.
    pub fn capped_for(self, params: &PotentialParams, form: PotentialForm) -> Self {
        if form != PotentialForm::Expanded || params.alpha == 0.0 {
            return self;
        }
        let cap = 2.0 / params.alpha;
        if cap >= self.r_max {
            return self;
        }
        let h = self.spacing();
        let num_points = (((cap - self.r_min) / h).ceil() as usize + 1).max(MIN_GRID_POINTS);
        Self {
            r_max: cap,
            num_points,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub e_lo: f64,
    pub e_hi: f64,
    /// Absolute energy tolerance.
    pub tol: f64,
    pub max_iter: usize,
}

impl SolverConfig {
    pub const DEFAULT_TOL: f64 = 1e-9;
    pub const DEFAULT_MAX_ITER: usize = 200;

    pub fn new(e_lo: f64, e_hi: f64) -> Result<Self> {
        Self {
            e_lo,
            e_hi,
            tol: Self::DEFAULT_TOL,
            max_iter: Self::DEFAULT_MAX_ITER,
        }
        .validated()
    }

    pub fn with_tol(self, tol: f64) -> Result<Self> {
        Self { tol, ..self }.validated()
    }

    pub fn with_max_iter(self, max_iter: usize) -> Result<Self> {
        Self { max_iter, ..self }.validated()
    }

    fn validated(self) -> Result<Self> {
        if !(self.e_lo.is_finite() && self.e_hi.is_finite() && self.e_lo < self.e_hi) {
            return Err(Error::Argument(format!(
                "energy bracket must satisfy e_lo < e_hi, got [{}, {}]",
                self.e_lo, self.e_hi
            )));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::Argument(format!(
                "tolerance must be > 0, got {}",
                self.tol
            )));
        }
        Ok(self)
    }

    /// Widest bracket that is safe on `grid`: from the bottom of the well (or
    /// the lowest energy at which the recurrence stays stable) up to the
    /// asymptote `a`.
    pub fn default_for(
        params: &PotentialParams,
        l: u32,
        form: PotentialForm,
        grid: &RadialGrid,
    ) -> Result<Self> {
        let table = tabulate(params, l, form, grid)?;
        let interior = &table.kv[1..];
        let min_v = interior.iter().copied().fold(f64::INFINITY, f64::min) / table.k;
        let max_v = table.kv[2..]
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
            / table.k;
        // keep h²k(V - E)/12 <= 1/2 so the recurrence cannot flip sign
        let stable_floor = max_v - 6.0 / (table.k * table.h * table.h);
        let e_lo = min_v.max(stable_floor);
        let e_hi = params.a;
        if e_lo >= e_hi {
            return Err(Error::NoBoundState {
                nodes: 0,
                e_lo,
                e_hi,
            });
        }
        Self::new(e_lo, e_hi)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub level: EnergyLevel,
    pub node_count: usize,
    pub u: RadialFunction,
    /// `|u(r_max)|` of the normalized wavefunction.
    pub tail_value: f64,
    pub grid: RadialGrid,
    pub iterations: usize,
}

/// An energy interval across which the node count of the outward solution
/// increases; it contains the level with `nodes` radial nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyBracket {
    pub e_lo: f64,
    pub e_hi: f64,
    pub nodes: usize,
}

fn tabulate(
    params: &PotentialParams,
    l: u32,
    form: PotentialForm,
    grid: &RadialGrid,
) -> Result<Tabulated> {
    params.validate()?;
    let k = 2.0 * params.mass_factor();
    let mut kv = Vec::with_capacity(grid.num_points());
    for i in 0..grid.num_points() {
        let r = grid.point(i);
        let v = params.effective_potential(l, r, form)?;
        if !v.is_finite() {
            return Err(Error::Domain(format!(
                "effective potential not finite at r = {r}"
            )));
        }
        kv.push(k * v);
    }
    Ok(Tabulated {
        h: grid.spacing(),
        k,
        kv,
        u0: regular_start(params, l, grid.point(0)),
        u1: regular_start(params, l, grid.point(1)),
    })
}

/// `r^(l+1) e^(c₁r)`: the regular solution through first order in `r`, with
/// `c₁ = -m(ab + c - d)/(l + 1)` from the Coulomb singularity.
fn regular_start(params: &PotentialParams, l: u32, r: f64) -> f64 {
    let c1 = -params.mass_factor() * params.derived().s2 / f64::from(l + 1);
    r.powi(l as i32 + 1) * (c1 * r).exp()
}

/// Bisects for the level with `qn.n` nodes inside `cfg`'s energy bracket.
pub fn solve_bound(
    params: &PotentialParams,
    qn: QuantumNumbers,
    form: PotentialForm,
    grid: &RadialGrid,
    cfg: &SolverConfig,
) -> Result<OracleResult> {
    let cfg = cfg.validated()?;
    let table = tabulate(params, qn.l, form, grid)?;
    let n = qn.n as usize;

    let (mut lo, mut hi) = (cfg.e_lo, cfg.e_hi);
    if table.count_nodes(lo) > n || table.count_nodes(hi) <= n {
        return Err(Error::NoBoundState {
            nodes: qn.n,
            e_lo: lo,
            e_hi: hi,
        });
    }
    let mut iterations = 0;
    while hi - lo > cfg.tol {
        if iterations == cfg.max_iter {
            return Err(Error::ConvergenceFailure {
                iterations,
                e_lo: lo,
                e_hi: hi,
            });
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // bracket is down to adjacent floats
            break;
        }
        if table.count_nodes(mid) > n {
            hi = mid;
        } else {
            lo = mid;
        }
        iterations += 1;
    }
    let energy = 0.5 * (lo + hi);

    let u = stitched_wavefunction(&table, energy);
    let grid_points = grid.points();
    let norm = trapezoid_norm(&grid_points, &u).sqrt();
    let values: Vec<f64> = u.iter().map(|v| v / norm).collect();
    let node_count = count_sign_changes(&values[1..values.len() - 1]);
    if node_count != n {
        return Err(Error::ConvergenceFailure {
            iterations,
            e_lo: lo,
            e_hi: hi,
        });
    }
    let tail_value = values[values.len() - 1].abs();

    Ok(OracleResult {
        level: EnergyLevel {
            value: energy,
            qn,
            method: Method::Oracle,
            extrapolated: false,
            params: *params,
        },
        node_count,
        u: RadialFunction {
            grid: grid_points,
            values,
            norm_constant: norm.recip(),
            normalizable: true,
        },
        tail_value,
        grid: *grid,
        iterations,
    })
}

fn stitched_wavefunction(table: &Tabulated, energy: f64) -> Vec<f64> {
    let n = table.kv.len();
    let ke = table.k * energy;
    // outermost classically allowed point
    let turning = table.kv.iter().rposition(|&kv| kv < ke).unwrap_or(n / 2);
    let matching = turning.clamp(2, n - 3);

    let mut u = table.outward(energy, matching);
    let inward = table.inward(energy, matching);
    let scale = u[matching] / inward[matching];
    u.extend(inward[matching + 1..].iter().map(|v| v * scale));
    u
}

/// Grid sized for a level near `e_guess`.
///
/// `r_max` covers [`AUTO_DECAY_LENGTHS`] decay lengths `1/κ`,
/// `κ = sqrt(2μ(a - e_guess))/ħ`, and the spacing resolves both `1/κ` and the
/// Bohr radius of the net Coulomb strength.
pub fn auto_grid(params: &PotentialParams, qn: QuantumNumbers, e_guess: f64) -> Result<RadialGrid> {
    params.validate()?;
    let depth = params.a - e_guess;
    if depth.is_nan() || depth <= 0.0 || !e_guess.is_finite() {
        return Err(Error::Argument(format!(
            "energy guess {e_guess} must lie below the asymptote a = {}",
            params.a
        )));
    }
    let m = params.mass_factor();
    let kappa = (2.0 * m * depth).sqrt();
    let r_max = AUTO_DECAY_LENGTHS / kappa;
    // inverse Bohr radius of the singular part; l > 0 states barely see it
    let coulomb = 2.0 * m * params.derived().s2.abs() / f64::from(qn.l + 1);
    let scale = kappa.max(coulomb);
    let h = AUTO_STEP_KAPPA / scale;
    let num_points = (((r_max - AUTO_R_MIN) / h).ceil() as usize + 1).max(MIN_GRID_POINTS);
    RadialGrid::new(AUTO_R_MIN, r_max, num_points)
}

/// Sweeps `steps + 1` energies across `e_range` and reports every interval
/// over which the node count rises.
pub fn bracket_scan(
    params: &PotentialParams,
    l: u32,
    form: PotentialForm,
    grid: &RadialGrid,
    e_range: (f64, f64),
    steps: usize,
    exec: Execution,
) -> Result<Vec<EnergyBracket>> {
    if steps < 10 {
        return Err(Error::Argument(format!(
            "bracket scan needs >= 10 steps, got {steps}"
        )));
    }
    let (lo, hi) = e_range;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Argument(format!(
            "invalid energy range [{lo}, {hi}]"
        )));
    }
    let table = tabulate(params, l, form, grid)?;
    let energies: Vec<f64> = (0..=steps)
        .map(|j| lo + (hi - lo) * j as f64 / steps as f64)
        .collect();
    let counts = exec.map(&energies, |&e| table.count_nodes(e));

    Ok(energies
        .windows(2)
        .zip(counts.windows(2))
        .filter(|(_, c)| c[1] > c[0])
        .map(|(e, c)| EnergyBracket {
            e_lo: e[0],
            e_hi: e[1],
            nodes: c[0],
        })
        .collect())
}

/// Solves for `qn` with an automatically chosen grid and bracket.
///
/// The grid is rebuilt around the converged energy until its extent no
/// longer grows. A level that keeps retreating towards the asymptote as the
/// box widens is a box artefact, not a bound state, and is reported as
/// [`Error::NoBoundState`].
pub fn solve(
    params: &PotentialParams,
    qn: QuantumNumbers,
    form: PotentialForm,
) -> Result<OracleResult> {
    const MAX_PASSES: usize = 6;
    let mut guess = initial_guess(params, qn);
    let mut last_bracket = (guess, params.a);
    for _ in 0..MAX_PASSES {
        let grid = auto_grid(params, qn, guess)?.capped_for(params, form);
        let cfg = SolverConfig::default_for(params, qn.l, form, &grid)?;
        last_bracket = (cfg.e_lo, cfg.e_hi);
        let result = solve_bound(params, qn, form, &grid, &cfg)?;
        let energy = result.level.value;
        let wanted = auto_grid(params, qn, energy)?.capped_for(params, form);
        let settled =
            wanted.r_max() <= grid.r_max() * 1.01 && wanted.spacing() >= grid.spacing() * 0.99;
        if settled {
            return Ok(result);
        }
        guess = energy;
    }
    Err(Error::NoBoundState {
        nodes: qn.n,
        e_lo: last_bracket.0,
        e_hi: last_bracket.1,
    })
}

fn initial_guess(params: &PotentialParams, qn: QuantumNumbers) -> f64 {
    if let Ok(level) = ansatz::ansatz_energy(params, qn) {
        if level.value.is_finite() && level.value < params.a {
            return level.value;
        }
    }
    let s2 = params.derived().s2;
    let big_n = f64::from(qn.principal());
    if s2 > 0.0 {
        params.a - params.mass_factor() * s2 * s2 / (2.0 * big_n * big_n)
    } else {
        params.a - 1.0
    }
}
