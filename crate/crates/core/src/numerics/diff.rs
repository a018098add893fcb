//! Ridders' extrapolated central differences for complex-valued functions
//! of one real variable.

use crate::error::{Error, Result};
use num_complex::Complex64;

const SHRINK: f64 = 1.4;
const TABLE: usize = 10;
const SAFE: f64 = 2.0;

/// Derivative estimate with its extrapolation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivative {
    pub value: Complex64,
    pub error: f64,
}

/// Derivative of `f` at `t`, starting from step `h0` and shrinking it
/// geometrically while a Neville table extrapolates the central
/// differences to zero step.
pub fn ridders_derivative<F>(f: F, t: f64, h0: f64) -> Result<Derivative>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if !(h0 > 0.0 && h0.is_finite()) {
        return Err(Error::Domain(format!("step must be positive, got {h0}")));
    }
    let mut a = [[Complex64::new(0.0, 0.0); TABLE]; TABLE];
    let mut h = h0;
    a[0][0] = (f(t + h)? - f(t - h)?) / (2.0 * h);
    let mut best = Derivative {
        value: a[0][0],
        error: f64::INFINITY,
    };
    let con2 = SHRINK * SHRINK;
    for i in 1..TABLE {
        h /= SHRINK;
        a[0][i] = (f(t + h)? - f(t - h)?) / (2.0 * h);
        let mut fac = con2;
        for j in 1..=i {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            let err = (a[j][i] - a[j - 1][i])
                .norm()
                .max((a[j][i] - a[j - 1][i - 1]).norm());
            if err <= best.error {
                best = Derivative {
                    value: a[j][i],
                    error: err,
                };
            }
        }
        if (a[i][i] - a[i - 1][i - 1]).norm() >= SAFE * best.error {
            break;
        }
    }
    Ok(best)
}
