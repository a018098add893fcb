//! Long-time behaviour of unstable quantum states.
//!
//! The model is a single unstable state whose energy distribution is a
//! Breit-Wigner (Lorentzian) cut off below a spectral threshold `E_min`.
//! The crate evaluates
//!
//! * the survival amplitude `a(t)` by a closed form built on the complex
//!   exponential integral, by direct oscillatory quadrature and by its
//!   long-time series ([`survival`]);
//! * the effective Hamiltonian `h(t) = iħ ȧ(t)/a(t)`, with the instantaneous
//!   energy `Re h` and decay rate `-2 Im h` ([`effham`]);
//! * the crossover time after which the power-law background dominates the
//!   exponential pole term ([`crossover`]);
//! * multi-line asymptotic-energy diagnostics for receding sources
//!   ([`redshift`]).
//!
//! Internally every computation runs in dimensionless units: energies are
//! measured from `E_min` in units of `γ⁰` and times in units of `ħ/γ⁰`.
//! Conversion happens at the public API boundary.

pub mod cli;
pub mod crossover;
pub mod density;
pub mod effham;
pub mod error;
pub mod numerics;
pub mod redshift;
pub mod survival;

pub use density::{NormalizedDensity, ResonanceParams, SpectralDensity};
pub use error::{Error, Result};
pub use numerics::{ComplexValue, QuadratureSpec};
