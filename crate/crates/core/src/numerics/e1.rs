//! Complex exponential integral `E1(z) = ∫₁^∞ e^{-zt}/t dt` on the principal
//! branch.
//!
//! Two evaluation paths are used: the convergent power series near the
//! origin (and close to the negative real axis, where the continued fraction
//! converges slowly) and a modified-Lentz continued fraction elsewhere. The
//! continued fraction produces the scaled value `e^z E1(z)` directly, which
//! is what the survival amplitude needs: for `t > 0` the model only ever
//! produces arguments `z = ±s/2 - i x s` with `x > 0`, which stay away from
//! the cut along the negative real axis.

use crate::error::{Error, Result};
use num_complex::Complex64;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_431_f64;

/// Radius inside which the power series is always used.
const SERIES_RADIUS: f64 = 4.0;
/// Close to the negative real axis the series is kept out to this radius.
const SERIES_RADIUS_NEAR_CUT: f64 = 50.0;
const MAX_SERIES_TERMS: usize = 500;
const MAX_CF_ITERATIONS: usize = 20_000;
/// `ln(f64::MAX)`.
const LN_MAX: f64 = 709.782_712_893_384;

/// Which algorithm evaluates `E1` at a given point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum E1Method {
    PowerSeries,
    ContinuedFraction,
}

impl E1Method {
    pub fn select(z: Complex64) -> Self {
        let r = z.norm();
        if r <= SERIES_RADIUS {
            E1Method::PowerSeries
        } else if z.re > 0.0 || z.im.abs() > 4.0 {
            E1Method::ContinuedFraction
        } else if r <= SERIES_RADIUS_NEAR_CUT {
            E1Method::PowerSeries
        } else {
            E1Method::ContinuedFraction
        }
    }
}

fn check_domain(z: Complex64) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("E1 argument is not finite: {z}")));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("E1 is singular at z = 0".into()));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Domain(format!(
            "E1 argument {z} lies on the branch cut"
        )));
    }
    Ok(())
}

/// `E1(z) = -γ - ln z - Σ_{k≥1} (-z)^k / (k·k!)`.
fn series(z: Complex64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let r = z.norm();
    for k in 1..=MAX_SERIES_TERMS {
        let kf = k as f64;
        term *= -z / kf;
        let contrib = term / kf;
        sum += contrib;
        if kf > r && contrib.norm() <= f64::EPSILON * 0.25 * sum.norm() {
            return Ok(-EULER_GAMMA - z.ln() - sum);
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_SERIES_TERMS,
        estimate: term.norm(),
    })
}

/// Modified Lentz evaluation of the even contraction
/// `e^z En(z) = 1/(z+n- 1·n/(z+n+2- 2(n+1)/(z+n+4- ...)))`.
fn continued_fraction_scaled(z: Complex64, n: u32) -> Result<Complex64> {
    let tiny = 1e-300;
    let nf = n as f64;
    let mut b = z + nf;
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..=MAX_CF_ITERATIONS {
        let an = -(i as f64) * (nf - 1.0 + i as f64);
        b += 2.0;
        d = an * d + b;
        if d.norm() < tiny {
            d = Complex64::new(tiny, 0.0);
        }
        d = d.inv();
        c = b + an / c;
        if c.norm() < tiny {
            c = Complex64::new(tiny, 0.0);
        }
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() <= f64::EPSILON {
            return Ok(h);
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_CF_ITERATIONS,
        estimate: f64::NAN,
    })
}

/// Principal-branch `E1(z)`.
///
/// Fails with [`Error::Domain`] at `z = 0` and on the negative real axis, and
/// with [`Error::Overflow`] when `|E1(z)|` is not representable; use
/// [`exp_integral_e1_scaled`] in that regime.
pub fn exp_integral_e1(z: Complex64) -> Result<Complex64> {
    check_domain(z)?;
    match E1Method::select(z) {
        E1Method::PowerSeries => series(z),
        E1Method::ContinuedFraction => {
            let scaled = continued_fraction_scaled(z, 1)?;
            let log_mag = -z.re + scaled.norm().ln();
            if log_mag > LN_MAX {
                return Err(Error::Overflow(format!(
                    "|E1({z})| ~ e^{log_mag:.1} is not representable"
                )));
            }
            let value = (-z).exp() * scaled;
            if value.re.is_finite() && value.im.is_finite() {
                Ok(value)
            } else {
                Err(Error::Overflow(format!("E1({z}) is not representable")))
            }
        }
    }
}

/// Scaled exponential integral `e^z E1(z)`, evaluated without forming
/// either factor separately where that would overflow.
pub fn exp_integral_e1_scaled(z: Complex64) -> Result<Complex64> {
    check_domain(z)?;
    match E1Method::select(z) {
        // Series region has |z| ≤ 50, so neither factor overflows.
        E1Method::PowerSeries => Ok(z.exp() * series(z)?),
        E1Method::ContinuedFraction => continued_fraction_scaled(z, 1),
    }
}

/// Scaled second exponential integral `e^z E2(z) = 1 - z e^z E1(z)`, taken
/// from its own continued fraction where that converges so the leading
/// cancellation in `1 - z e^z E1(z)` never happens.
pub fn exp_integral_e2_scaled(z: Complex64) -> Result<Complex64> {
    check_domain(z)?;
    match E1Method::select(z) {
        E1Method::PowerSeries => Ok(1.0 - z * z.exp() * series(z)?),
        E1Method::ContinuedFraction => continued_fraction_scaled(z, 2),
    }
}

/// Truncated asymptotic expansion
/// `E1(z) ≈ e^{-z}/z · Σ_{k<n} (-1)^k k!/z^k`, with `1 ≤ n_terms ≤ 8`.
pub fn e1_asymptotic(z: Complex64, n_terms: usize) -> Result<Complex64> {
    if !(1..=8).contains(&n_terms) {
        return Err(Error::Domain(format!(
            "n_terms must be in 1..=8, got {n_terms}"
        )));
    }
    if z.norm() == 0.0 || !z.norm().is_finite() {
        return Err(Error::Domain(format!("asymptotic E1 needs 0 < |z| < ∞, got {z}")));
    }
    let inv = z.inv();
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..n_terms {
        term *= -(k as f64) * inv;
        sum += term;
    }
    Ok((-z).exp() * inv * sum)
}
