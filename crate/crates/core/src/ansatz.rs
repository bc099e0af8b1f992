//! Closed-form energies and ground-state wavefunctions from the ansatz
//!
//! ```text
//! u(r) = f(r) · exp(-A r²/2 + B r + δ ln r)
//! ```
//!
//! Substituting into the radial equation with the third-order expanded
//! potential and matching powers of `r` gives
//!
//! ```text
//! r⁻²:  δ(δ - 1)  = l(l + 1)               ->  δ = l + 1
//! r⁻¹:  B δ       = -m (ab + c - d)
//! r¹ :  2 A B     =  m (ab - d) α²
//! r² :  A²        =  m (ab - d) α³ / 3
//! r⁰ :  E         =  a + (ab - d) α + (A (1 + 2δ) - B²) / (2m)
//! ```
//!
//! with `m = μ/ħ²`. The system is over-determined: `A` is fixed by both the
//! `r¹` and `r²` lines. Energies and wavefunctions use the `r¹` value and the
//! `r²` mismatch is reported as [`AnsatzParams::residual`].
//!
//! Only `n = 0` and `n = 1` have published closed forms; higher `n` continue
//! the same pattern and are flagged as extrapolated.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::potentials::{DerivedConstants, PotentialParams};
use crate::{Error, Result};

/// Radial node count `n` and orbital quantum number `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
}

impl QuantumNumbers {
    pub const fn new(n: u32, l: u32) -> Self {
        Self { n, l }
    }

    /// Principal quantum number `n + l + 1`.
    pub const fn principal(&self) -> u32 {
        self.n + self.l + 1
    }

    /// Decodes a spectroscopic label such as `"3d"` into `(n = 0, l = 2)`.
    pub fn from_label(label: &str) -> Result<Self> {
        let bad = || Error::Argument(format!("invalid spectroscopic label `{label}`"));
        let letter = label.chars().last().ok_or_else(bad)?;
        let principal: u32 = label[..label.len() - letter.len_utf8()]
            .parse()
            .map_err(|_| bad())?;
        let l = "spdfghik"
            .find(letter.to_ascii_lowercase())
            .ok_or_else(bad)? as u32;
        if principal < l + 1 {
            return Err(bad());
        }
        Ok(Self::new(principal - l - 1, l))
    }

    pub fn label(&self) -> String {
        let letter = "spdfghik".chars().nth(self.l as usize).unwrap_or('?');
        format!("{}{}", self.principal(), letter)
    }
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n={}, l={})", self.label(), self.n, self.l)
    }
}

/// Matched exponent coefficients of the ansatz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnsatzParams {
    /// Gaussian coefficient `A` (from the `r¹` relation).
    pub gauss: f64,
    /// Linear coefficient `B`.
    pub linear: f64,
    /// Logarithmic coefficient `δ = l + 1`.
    pub delta: f64,
    /// `|A² - m (ab - d) α³ / 3|`, the defect of the unused `r²` relation.
    pub residual: f64,
    /// `n >= 2`: coefficients follow the low-n pattern, not a published result.
    pub extrapolated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Ansatz,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Ansatz => "ansatz",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub value: f64,
    pub qn: QuantumNumbers,
    pub method: Method,
    pub extrapolated: bool,
    pub params: PotentialParams,
}

/// Reduced radial wavefunction `u(r) = r ψ(r)` sampled on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub norm_constant: f64,
    pub normalizable: bool,
}

impl RadialFunction {
    /// Trapezoidal `∫ u² dr` over the stored grid.
    pub fn norm_squared(&self) -> f64 {
        trapezoid_norm(&self.grid, &self.values)
    }

    /// Least-squares slope of `ln|u|` against `ln r` over the first `count`
    /// nonzero samples; tends to `l + 1` for a regular solution.
    pub fn origin_exponent(&self, count: usize) -> f64 {
        let pts: Vec<(f64, f64)> = self
            .grid
            .iter()
            .zip(&self.values)
            .filter(|(_, u)| **u != 0.0)
            .take(count)
            .map(|(r, u)| (r.ln(), u.abs().ln()))
            .collect();
        let k = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
        let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
        let sxx: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
        sxy / sxx
    }

    /// Number of strict sign changes between interior samples.
    pub fn node_count(&self) -> usize {
        count_sign_changes(&self.values)
    }
}

pub(crate) fn trapezoid_norm(grid: &[f64], values: &[f64]) -> f64 {
    grid.windows(2)
        .zip(values.windows(2))
        .map(|(r, u)| 0.5 * (r[1] - r[0]) * (u[0] * u[0] + u[1] * u[1]))
        .sum()
}

pub(crate) fn count_sign_changes(values: &[f64]) -> usize {
    let mut last = 0.0f64;
    let mut changes = 0;
    for &u in values {
        if u == 0.0 {
            continue;
        }
        if last != 0.0 && (u > 0.0) != (last > 0.0) {
            changes += 1;
        }
        last = u;
    }
    changes
}

pub(crate) fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Argument("radial grid is empty".into()));
    }
    if !grid.iter().all(|r| r.is_finite() && *r > 0.0) {
        return Err(Error::Argument(
            "radial grid points must be finite and > 0".into(),
        ));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Argument(
            "radial grid must be strictly ascending".into(),
        ));
    }
    Ok(())
}

fn net_coulomb(params: &PotentialParams) -> Result<DerivedConstants> {
    let derived = params.derived();
    if derived.s2 == 0.0 {
        return Err(Error::NetCoulombVanishes);
    }
    Ok(derived)
}

/// Solves the power-matching relations for `A`, `B` and `δ`.
pub fn match_coefficients(params: &PotentialParams, qn: QuantumNumbers) -> Result<AnsatzParams> {
    params.validate()?;
    let DerivedConstants { s1, s2, .. } = net_coulomb(params)?;
    let m = params.mass_factor();
    let alpha = params.alpha;

    let delta = f64::from(qn.l) + 1.0;
    let linear = -m * s2 / f64::from(qn.principal());
    let gauss = m * s1 * alpha * alpha / (2.0 * linear);
    let residual = (gauss * gauss - m * s1 * alpha.powi(3) / 3.0).abs();

    Ok(AnsatzParams {
        gauss,
        linear,
        delta,
        residual,
        extrapolated: qn.n >= 2,
    })
}

/// Closed-form energy of state `qn`.
///
/// ```text
/// E = a + (ab-d)α - (l+1)·((ab-d)α²/2)·(2l+3+2n) / (2m(ab+c-d)) - 2m(ab+c-d)² / (4(n+l+1)²)
/// ```
pub fn ansatz_energy(params: &PotentialParams, qn: QuantumNumbers) -> Result<EnergyLevel> {
    params.validate()?;
    let DerivedConstants { s1, s2, .. } = net_coulomb(params)?;
    let m = params.mass_factor();
    let alpha = params.alpha;
    let l = f64::from(qn.l);
    let n = f64::from(qn.n);
    let principal = f64::from(qn.principal());

    let screening =
        (l + 1.0) * (s1 * alpha * alpha / 2.0) * (2.0 * l + 3.0 + 2.0 * n) / (2.0 * m * s2);
    let coulomb = 2.0 * m * s2 * s2 / (4.0 * principal * principal);
    let value = params.a + s1 * alpha - screening - coulomb;

    Ok(EnergyLevel {
        value,
        qn,
        method: Method::Ansatz,
        extrapolated: qn.n >= 2,
        params: *params,
    })
}

/// Samples `u(r) = N r^(l+1) exp(-A r²/2 + B r)` for the nodeless state.
///
/// When the Gaussian coefficient is negative (or zero with `B >= 0`) the
/// function grows without bound; it is still sampled with `N = 1` and
/// `normalizable = false`.
pub fn ansatz_wavefunction(
    params: &PotentialParams,
    qn: QuantumNumbers,
    grid: &[f64],
) -> Result<RadialFunction> {
    if qn.n != 0 {
        return Err(Error::UnsupportedExcitedWavefunction { n: qn.n });
    }
    validate_grid(grid)?;
    let coeffs = match_coefficients(params, qn)?;
    let (a, b) = (coeffs.gauss, coeffs.linear);
    let normalizable = a > 0.0 || (a == 0.0 && b < 0.0);

    let power = qn.l as i32 + 1;
    let mut values: Vec<f64> = grid
        .iter()
        .map(|&r| r.powi(power) * (-0.5 * a * r * r + b * r).exp())
        .collect();

    let mut norm_constant = 1.0;
    if normalizable {
        norm_constant = trapezoid_norm(grid, &values).sqrt().recip();
        values.iter_mut().for_each(|u| *u *= norm_constant);
    }

    Ok(RadialFunction {
        grid: grid.to_vec(),
        values,
        norm_constant,
        normalizable,
    })
}
