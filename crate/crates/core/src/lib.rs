//! Bound-state energies and wavefunctions of the radial Schrödinger equation
//! for the Varshni-Hellmann potential family
//!
//! ```text
//! V(r) = a + (d - ab) e^(-αr) / r - c / r
//! ```
//!
//! Two independent routes are provided: closed-form energies from an
//! exponential-polynomial ansatz ([`ansatz`]) and a Numerov shooting
//! eigensolver ([`oracle`]). [`benchmarks`] regenerates the published
//! comparison tables and figure series, and [`cli`] is the command-line
//! front end behind the `vhp` binary.

pub mod ansatz;
pub mod benchmarks;
pub mod cli;
mod error;
pub mod exec;
pub mod oracle;
pub mod potentials;

pub use ansatz::{AnsatzParams, EnergyLevel, Method, QuantumNumbers, RadialFunction};
pub use error::{Error, Result};
pub use exec::Execution;
pub use potentials::{DerivedConstants, PotentialForm, PotentialParams};
