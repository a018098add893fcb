//! Special functions and quadrature used by the model layers.
//!
//! Everything here is a pure function of its arguments.

mod diff;
mod e1;
mod lambert;
mod quadrature;

pub use diff::{ridders_derivative, Derivative};
pub use e1::{e1_asymptotic, exp_integral_e1, exp_integral_e1_scaled, exp_integral_e2_scaled, E1Method};
pub use lambert::{lambert_w, LambertBranch};
pub use quadrature::{
    integrate, integrate_oscillatory, integrate_oscillatory_with_breakpoints,
    integrate_semi_infinite, Integral, QuadValue, QuadratureSpec,
};

/// Complex number used for amplitudes, exponential-integral values and
/// effective Hamiltonians.
pub type ComplexValue = num_complex::Complex64;
