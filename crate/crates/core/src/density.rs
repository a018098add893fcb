//! Truncated Breit–Wigner energy density of the unstable state.

use crate::error::{Error, Result};
use crate::numerics::ComplexValue;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

fn default_hbar() -> f64 {
    1.0
}

/// Parameters of one unstable state: spectral threshold `e_min`, resonance
/// position `e0`, width `gamma0` and the value of `ħ` in the chosen units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResonanceParams {
    pub e_min: f64,
    pub e0: f64,
    pub gamma0: f64,
    #[serde(default = "default_hbar")]
    pub hbar: f64,
}

impl ResonanceParams {
    pub fn new(e_min: f64, e0: f64, gamma0: f64, hbar: f64) -> Result<Self> {
        let p = Self {
            e_min,
            e0,
            gamma0,
            hbar,
        };
        p.validate()?;
        Ok(p)
    }

    /// Builds parameters from the ratio `x = (e0 - e_min)/gamma0`.
    pub fn from_ratio(e_min: f64, x: f64, gamma0: f64, hbar: f64) -> Result<Self> {
        Self::new(e_min, e_min + x * gamma0, gamma0, hbar)
    }

    pub fn validate(&self) -> Result<()> {
        let all_finite = [self.e_min, self.e0, self.gamma0, self.hbar]
            .iter()
            .all(|v| v.is_finite());
        if !all_finite {
            return Err(Error::InvalidParams("parameters must be finite".into()));
        }
        if self.gamma0 <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "gamma0 must be positive, got {}",
                self.gamma0
            )));
        }
        if self.hbar <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "hbar must be positive, got {}",
                self.hbar
            )));
        }
        if self.e0 <= self.e_min {
            return Err(Error::InvalidParams(format!(
                "e0 ({}) must lie above e_min ({})",
                self.e0, self.e_min
            )));
        }
        Ok(())
    }

    /// Lifetime `τ = ħ/γ⁰`.
    pub fn lifetime(&self) -> f64 {
        self.hbar / self.gamma0
    }

    /// `x = (E⁰ - E_min)/γ⁰`.
    pub fn ratio(&self) -> f64 {
        (self.e0 - self.e_min) / self.gamma0
    }

    /// Complex pole `h⁰ = E⁰ - iγ⁰/2`.
    pub fn pole(&self) -> ComplexValue {
        ComplexValue::new(self.e0, -0.5 * self.gamma0)
    }

    /// `|h⁰ - E_min|² = (E⁰ - E_min)² + (γ⁰/2)²`.
    pub fn pole_distance_sq(&self) -> f64 {
        let d = self.e0 - self.e_min;
        d * d + 0.25 * self.gamma0 * self.gamma0
    }

    /// Dimensionless time `s = γ⁰ t/ħ`.
    pub fn scaled_time(&self, t: f64) -> f64 {
        t / self.lifetime()
    }
}

/// Normalization constant as a function of `x = (E⁰ - E_min)/γ⁰ ≥ 0`:
/// `N = [1/2 + arctan(2x)/π]⁻¹`. `x = 0` is accepted here (giving `N = 2`)
/// although such parameters are rejected as a model.
pub fn normalization_from_ratio(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::InvalidParams(format!("x must be non-negative, got {x}")));
    }
    // 1/2 + arctan(2x)/π = 1 - arctan(1/(2x))/π, the latter keeps the
    // deficit accurate for large x.
    let deficit = if x == 0.0 {
        0.5
    } else {
        (0.5 / x).atan() / PI
    };
    Ok(1.0 / (1.0 - deficit))
}

/// Normalization constant `N` of the truncated Breit–Wigner density.
pub fn normalization_constant(params: &ResonanceParams) -> Result<f64> {
    params.validate()?;
    normalization_from_ratio(params.ratio())
}

/// A normalized spectral density supported on `[support_lower, ∞)`.
///
/// Only the truncated Breit–Wigner form ships; other densities plug in
/// here.
pub trait SpectralDensity {
    fn support_lower(&self) -> f64;
    fn evaluate(&self, e: f64) -> f64;
    fn normalization(&self) -> f64;
}

/// Truncated Breit–Wigner density with its normalization constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedDensity {
    params: ResonanceParams,
    norm_n: f64,
}

impl NormalizedDensity {
    pub fn new(params: ResonanceParams) -> Result<Self> {
        let norm_n = normalization_constant(&params)?;
        Ok(Self { params, norm_n })
    }

    pub fn params(&self) -> &ResonanceParams {
        &self.params
    }

    pub fn norm(&self) -> f64 {
        self.norm_n
    }

    /// `ω(E) = (N/2π) Θ(E - E_min) γ⁰ / ((E - E⁰)² + (γ⁰/2)²)`.
    pub fn density_at(&self, e: f64) -> f64 {
        let p = &self.params;
        if e < p.e_min {
            return 0.0;
        }
        let d = e - p.e0;
        self.norm_n / (2.0 * PI) * p.gamma0 / (d * d + 0.25 * p.gamma0 * p.gamma0)
    }

    /// The density in dimensionless energy `ε = (E - E_min)/γ⁰`, without the
    /// `N/2π` prefactor: `1/((ε - x)² + 1/4)` for `ε ≥ 0`.
    pub(crate) fn reduced_lorentzian(&self, eps: f64) -> f64 {
        if eps < 0.0 {
            return 0.0;
        }
        let d = eps - self.params.ratio();
        1.0 / (d * d + 0.25)
    }
}

impl SpectralDensity for NormalizedDensity {
    fn support_lower(&self) -> f64 {
        self.params.e_min
    }

    fn evaluate(&self, e: f64) -> f64 {
        self.density_at(e)
    }

    fn normalization(&self) -> f64 {
        self.norm_n
    }
}
