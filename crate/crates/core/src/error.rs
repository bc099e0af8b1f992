use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A function was evaluated outside its domain (e.g. `r <= 0`).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    /// `ab + c - d = 0`: the ansatz linear coefficient is undefined.
    #[error("net Coulomb strength ab + c - d vanishes")]
    NetCoulombVanishes,

    #[error("ansatz wavefunction is only available for n = 0 (requested n = {n})")]
    UnsupportedExcitedWavefunction { n: u32 },

    #[error("no bound state with {nodes} nodes in energy bracket [{e_lo}, {e_hi}]")]
    NoBoundState { nodes: u32, e_lo: f64, e_hi: f64 },

    #[error(
        "bisection did not converge after {iterations} iterations; best bracket [{e_lo}, {e_hi}]"
    )]
    ConvergenceFailure {
        iterations: usize,
        e_lo: f64,
        e_hi: f64,
    },

    #[error("reference data: {0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
