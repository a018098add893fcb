//! Real branches of the Lambert W function, `w e^w = x`.
//!
//! Initial guesses come from the branch-point series near `x = -1/e` and
//! from the logarithmic asymptotics elsewhere; they are refined with the
//! Fritsch–Shafer–Crowley iteration, which converges in one or two steps
//! from these seeds.

use crate::error::{Error, Result};
use std::f64::consts::E;

/// Real branch selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambertBranch {
    /// `W₀`, defined on `[-1/e, ∞)` with values `≥ -1`.
    Principal,
    /// `W₋₁`, defined on `[-1/e, 0)` with values `≤ -1`.
    Lower,
}

impl TryFrom<i32> for LambertBranch {
    type Error = Error;

    fn try_from(k: i32) -> Result<Self> {
        match k {
            0 => Ok(LambertBranch::Principal),
            -1 => Ok(LambertBranch::Lower),
            _ => Err(Error::Domain(format!("Lambert W branch {k} is not real"))),
        }
    }
}

/// Series in `p = ±sqrt(2(e x + 1))` about the branch point.
fn branch_point_series(p: f64) -> f64 {
    const C: [f64; 7] = [
        -1.0,
        1.0,
        -1.0 / 3.0,
        11.0 / 72.0,
        -43.0 / 540.0,
        769.0 / 17280.0,
        -221.0 / 8505.0,
    ];
    C.iter().rev().fold(0.0, |acc, &c| acc * p + c)
}

fn fritsch(x: f64, mut w: f64) -> f64 {
    for _ in 0..8 {
        let z = (x / w).ln() - w;
        let wp1 = 1.0 + w;
        let q = 2.0 * wp1 * (wp1 + 2.0 * z / 3.0);
        let eps = z / wp1 * (q - z) / (q - 2.0 * z);
        let next = w * (1.0 + eps);
        let done = (next - w).abs() <= 2.0 * f64::EPSILON * next.abs();
        w = next;
        if done || !w.is_finite() {
            break;
        }
    }
    w
}

/// Solves `w e^w = x` on the requested real branch.
pub fn lambert_w(branch: LambertBranch, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("Lambert W argument {x} is not finite")));
    }
    let branch_point = -1.0 / E;
    if x < branch_point {
        return Err(Error::Domain(format!(
            "Lambert W argument {x} is below -1/e"
        )));
    }
    if branch == LambertBranch::Lower && x >= 0.0 {
        return Err(Error::Domain(format!(
            "W_-1 is defined on [-1/e, 0), got {x}"
        )));
    }
    let p2 = (2.0 * (E * x + 1.0)).max(0.0);
    let p = match branch {
        LambertBranch::Principal => p2.sqrt(),
        LambertBranch::Lower => -p2.sqrt(),
    };
    if p.abs() < 1e-3 {
        // Truncation error ~ p^7 is far below f64 resolution here.
        return Ok(clamp(branch, branch_point_series(p)));
    }

    let w = match branch {
        LambertBranch::Principal => {
            if x == 0.0 {
                return Ok(0.0);
            }
            if x.abs() < 1e-8 {
                return Ok(x * (1.0 - x * (1.0 - 1.5 * x)));
            }
            let seed = if x < -0.25 {
                branch_point_series(p)
            } else if x < 3.0 {
                let l = x.ln_1p();
                l * (1.0 - (1.0 + l).ln() / (2.0 + l))
            } else {
                let l1 = x.ln();
                let l2 = l1.ln();
                l1 - l2 + l2 / l1
            };
            fritsch(x, seed)
        }
        LambertBranch::Lower => {
            let seed = if x < -0.25 {
                branch_point_series(p)
            } else {
                let l1 = (-x).ln();
                let l2 = (-l1).ln();
                l1 - l2 + l2 / l1
            };
            fritsch(x, seed)
        }
    };
    if !w.is_finite() {
        return Err(Error::NonConvergence {
            iterations: 8,
            estimate: f64::NAN,
        });
    }
    Ok(clamp(branch, w))
}

fn clamp(branch: LambertBranch, w: f64) -> f64 {
    match branch {
        LambertBranch::Principal => w.max(-1.0),
        LambertBranch::Lower => w.min(-1.0),
    }
}
