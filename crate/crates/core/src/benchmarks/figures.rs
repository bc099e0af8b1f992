//! Data series behind the potential and energy-trend figures, all on the
//! Table 1 parameter set (`a = 1, b = -1, c = 4, d = -4`, ħ = 2μ = 1).

use crate::ansatz::ansatz_energy;
use crate::exec::Execution;
use crate::{Error, Result};

use super::{figure_states, TableId, TableSetup, TABLE1_ALPHAS};

pub const POTENTIAL_R_RANGE: (f64, f64) = (0.1, 10.0);
pub const POTENTIAL_POINTS: usize = 500;
pub const ALPHA_RANGE: (f64, f64) = (0.01, 0.1);
pub const MASS_RANGE: (f64, f64) = (0.25, 2.0);
pub const SWEEP_POINTS: usize = 50;
/// Screening used for the mass sweep.
pub const MASS_SWEEP_ALPHA: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    /// `V(r)` for several `α`.
    Potential = 1,
    /// `E_{0l}` against `α`.
    EnergyVsAlpha = 2,
    /// `E_{0l}` against `μ`.
    EnergyVsMass = 3,
}

impl FigureId {
    pub fn new(id: u8) -> Result<Self> {
        match id {
            1 => Ok(Self::Potential),
            2 => Ok(Self::EnergyVsAlpha),
            3 => Ok(Self::EnergyVsMass),
            other => Err(Error::Argument(format!(
                "figure id must be 1..=3, got {other}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSeries {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

fn linspace((lo, hi): (f64, f64), count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

pub fn figure_data(id: FigureId, exec: Execution) -> Result<Vec<FigureSeries>> {
    let setup = TableSetup::for_table(TableId::Vhp);
    match id {
        FigureId::Potential => {
            let radii = linspace(POTENTIAL_R_RANGE, POTENTIAL_POINTS);
            TABLE1_ALPHAS
                .iter()
                .map(|&alpha| {
                    let params = setup.params(alpha)?;
                    let ys = exec
                        .map(&radii, |&r| params.eval_full(r))
                        .into_iter()
                        .collect::<Result<Vec<_>>>()?;
                    Ok(FigureSeries {
                        label: format!("alpha={alpha}"),
                        points: radii.iter().copied().zip(ys).collect(),
                    })
                })
                .collect()
        }
        FigureId::EnergyVsAlpha => {
            let alphas = linspace(ALPHA_RANGE, SWEEP_POINTS);
            figure_states()
                .iter()
                .map(|&qn| {
                    let ys = exec
                        .map(&alphas, |&alpha| {
                            Ok(ansatz_energy(&setup.params(alpha)?, qn)?.value)
                        })
                        .into_iter()
                        .collect::<Result<Vec<_>>>()?;
                    Ok(FigureSeries {
                        label: format!("l={}", qn.l),
                        points: alphas.iter().copied().zip(ys).collect(),
                    })
                })
                .collect()
        }
        FigureId::EnergyVsMass => {
            let masses = linspace(MASS_RANGE, SWEEP_POINTS);
            let base = setup.params(MASS_SWEEP_ALPHA)?;
            figure_states()
                .iter()
                .map(|&qn| {
                    let ys = exec
                        .map(&masses, |&mu| {
                            Ok(ansatz_energy(&base.with_mass(mu)?, qn)?.value)
                        })
                        .into_iter()
                        .collect::<Result<Vec<_>>>()?;
                    Ok(FigureSeries {
                        label: format!("l={}", qn.l),
                        points: masses.iter().copied().zip(ys).collect(),
                    })
                })
                .collect()
        }
    }
}
