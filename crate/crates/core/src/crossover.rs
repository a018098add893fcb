//! Crossover time `t_as` after which the inverse-power background of
//! `|a(t)|²` overtakes the exponential pole term.
//!
//! Comparing the squared moduli of the two leading terms (the common `N²`
//! cancels) gives, in `s = γ⁰t/ħ`,
//!
//! ```text
//! e^{-s} = A / s²,   A = (1/4π²) / (x² + 1/4)²
//! ```
//!
//! Rewritten as `(-s/2) e^{-s/2} = -√A/2`, the equation has the two real
//! roots `s = -2 W₀(-√A/2)` and `s = -2 W₋₁(-√A/2)`. The larger one is the
//! physical crossover; the smaller one sits inside the short-time era.

use crate::density::{NormalizedDensity, ResonanceParams};
use crate::error::{Error, Result};
use crate::numerics::{lambert_w, LambertBranch};
use serde::Serialize;
use std::f64::consts::{E, PI};

/// Constant of the closed-form approximation `8.28 + 4 ln x + 2 ln(8.28 + 4 ln x)`.
pub const PAPER_APPROX_CONSTANT: f64 = 8.28;

/// Smallest `x` for which the approximation is quoted as valid.
pub const PAPER_APPROX_MIN_RATIO: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossoverMethod {
    LambertW,
    Bisection,
}

/// Roots of the crossover equation together with the closed-form
/// approximation. All `s_*` values are in units of `ħ/γ⁰`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossoverResult {
    pub s_exact_small: Option<f64>,
    pub s_exact_large: f64,
    /// `None` when the approximation is undefined (`8.28 + 4 ln x ≤ 0`).
    pub s_paper_approx: Option<f64>,
    /// `|e^{-s} - A/s²|` at `s_exact_large`.
    pub residual: f64,
    pub a_coefficient: f64,
    pub method: CrossoverMethod,
}

impl CrossoverResult {
    /// Physical crossover time in the caller's time unit.
    pub fn t_as(&self, params: &ResonanceParams) -> f64 {
        self.s_exact_large * params.lifetime()
    }

    /// Residual relative to the larger side of the equation.
    pub fn relative_residual(&self) -> f64 {
        let (lhs, rhs) = sides(self.a_coefficient, self.s_exact_large);
        self.residual / lhs.max(rhs)
    }

    /// `s_paper_approx / s_exact_large - 1`.
    pub fn approx_discrepancy(&self) -> Option<f64> {
        self.s_paper_approx.map(|s| s / self.s_exact_large - 1.0)
    }
}

/// `A = (1/4π²)(γ⁰)⁴/|h⁰ - E_min|⁴ = (1/4π²)/(x² + 1/4)²`.
pub fn crossover_coefficient(d: &NormalizedDensity) -> f64 {
    coefficient_from_ratio(d.params().ratio())
}

fn coefficient_from_ratio(x: f64) -> f64 {
    let q = x * x + 0.25;
    1.0 / (4.0 * PI * PI * q * q)
}

fn sides(a: f64, s: f64) -> (f64, f64) {
    ((-s).exp(), a / (s * s))
}

/// `(e^{-s}, A/s²)` for `s > 0`.
pub fn crossover_equation_sides(d: &NormalizedDensity, s: f64) -> Result<(f64, f64)> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::Domain(format!("s must be positive and finite, got {s}")));
    }
    Ok(sides(crossover_coefficient(d), s))
}

/// `ln(lhs/rhs) = -s - ln A + 2 ln s`; positive while the exponential
/// term dominates.
fn log_ratio(ln_a: f64, s: f64) -> f64 {
    -s - ln_a + 2.0 * s.ln()
}

fn newton_polish(ln_a: f64, mut s: f64) -> f64 {
    for _ in 0..3 {
        let g = log_ratio(ln_a, s);
        let dg = -1.0 + 2.0 / s;
        if dg == 0.0 {
            break;
        }
        let next = s - g / dg;
        if !(next > 0.0) || !next.is_finite() {
            break;
        }
        if (next - s).abs() <= 4.0 * f64::EPSILON * s {
            s = next;
            break;
        }
        s = next;
    }
    s
}

fn bisect(ln_a: f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut g_lo = log_ratio(ln_a, lo);
    let g_hi = log_ratio(ln_a, hi);
    if g_lo.signum() == g_hi.signum() {
        return Err(Error::NoCrossover(format!("bracket [{lo}, {hi}] holds no sign change")));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let g = log_ratio(ln_a, mid);
        if g == 0.0 {
            return Ok(mid);
        }
        if g.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn check_existence(a: f64) -> Result<f64> {
    let arg = -0.5 * a.sqrt();
    if arg < -1.0 / E {
        return Err(Error::NoCrossover(format!(
            "√A/2 = {} exceeds 1/e; the exponential term never dominates",
            -arg
        )));
    }
    Ok(arg)
}

fn finish(
    d: &NormalizedDensity,
    a: f64,
    small: Option<f64>,
    large: f64,
    method: CrossoverMethod,
) -> CrossoverResult {
    let (lhs, rhs) = sides(a, large);
    CrossoverResult {
        s_exact_small: small,
        s_exact_large: large,
        s_paper_approx: paper_approx_crossover(d).ok(),
        residual: (lhs - rhs).abs(),
        a_coefficient: a,
        method,
    }
}

/// Both roots via Lambert W, polished by Newton steps on `ln(lhs/rhs)`.
/// Falls back to [`solve_crossover_bisection`] if W fails.
pub fn solve_crossover(d: &NormalizedDensity) -> Result<CrossoverResult> {
    let a = crossover_coefficient(d);
    let arg = check_existence(a)?;
    let ln_a = a.ln();
    let lower = lambert_w(LambertBranch::Lower, arg);
    let principal = lambert_w(LambertBranch::Principal, arg);
    match (lower, principal) {
        (Ok(w_large), Ok(w_small)) => {
            let large = newton_polish(ln_a, -2.0 * w_large);
            let small = newton_polish(ln_a, -2.0 * w_small);
            let (lhs, rhs) = sides(a, large);
            if (lhs - rhs).abs() <= 1e-12 * lhs.max(rhs) {
                let small = (small > 0.0 && small < large).then_some(small);
                return Ok(finish(d, a, small, large, CrossoverMethod::LambertW));
            }
            solve_crossover_bisection(d)
        }
        _ => solve_crossover_bisection(d),
    }
}

/// Both roots by bisection on `ln(lhs/rhs)`. The large root is bracketed
/// by `[L/2, 4L + 100]` with `L = ln(1/A)`.
pub fn solve_crossover_bisection(d: &NormalizedDensity) -> Result<CrossoverResult> {
    let a = crossover_coefficient(d);
    check_existence(a)?;
    let ln_a = a.ln();
    let l = -ln_a;
    let large = bisect(ln_a, 0.5 * l.max(4.0), 4.0 * l + 100.0)?;
    let small = bisect(ln_a, 1e-3 * a.sqrt(), 2.0f64.min(large)).ok();
    Ok(finish(d, a, small, large, CrossoverMethod::Bisection))
}

/// `8.28 + 4 ln x + 2 ln(8.28 + 4 ln x)`, taken verbatim. Quoted as valid
/// only for `x > 100`; see [`paper_approx_in_range`].
pub fn paper_approx_crossover(d: &NormalizedDensity) -> Result<f64> {
    paper_approx_from_ratio(d.params().ratio())
}

pub fn paper_approx_from_ratio(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ratio must be positive, got {x}")));
    }
    let inner = PAPER_APPROX_CONSTANT + 4.0 * x.ln();
    if inner <= 0.0 {
        return Err(Error::Domain(format!(
            "approximation undefined for x = {x}: inner term {inner} is not positive"
        )));
    }
    Ok(inner + 2.0 * inner.ln())
}

pub fn paper_approx_in_range(d: &NormalizedDensity) -> bool {
    d.params().ratio() > PAPER_APPROX_MIN_RATIO
}
