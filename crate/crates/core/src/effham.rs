//! Effective Hamiltonian `h(t) = iħ ȧ(t)/a(t)`, instantaneous energy
//! `E(t) = Re h` and decay rate `γ(t) = -2 Im h`.
//!
//! The exact route uses the decomposition `h(t) = h⁰ + Δa(t)/a(t)` with
//! `h⁰ = E⁰ - iγ⁰/2`, which avoids differentiating anything numerically.
//! A Ridders finite-difference route on the closed-form amplitude serves as
//! a check.
//!
//! For this density `⟨φ|H|φ⟩` diverges, so `E(t)` grows without bound as
//! `t → 0⁺`; the instantaneous quantities are only meaningful for `t > 0`.
//!
//! The module also carries the generic power-law tail
//! `a(t) ~ e^{-iE_min t/ħ} Σ_k c_k / t^{λ+k}` ([`PowerLawModel`]), whose
//! Hamiltonian tends to `E_min` like `E_min + d₁/t + d₂/t² + …`.

use crate::density::NormalizedDensity;
use crate::error::{Error, Result};
use crate::numerics::{exp_integral_e1_scaled, exp_integral_e2_scaled, ridders_derivative, ComplexValue};
use crate::survival::{reduced_amplitude, reduced_delta, reduced_envelope, AmplitudeSample};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;

/// Amplitudes below this magnitude make `h(t)` meaningless.
pub const AMPLITUDE_FLOOR: f64 = 1e-250;

/// Fraction of the asymptotic envelope below which a sample is flagged.
pub const CONDITIONING_FRACTION: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonianRoute {
    ExactRatio,
    FiniteDifference,
    Asymptotic,
}

impl fmt::Display for HamiltonianRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HamiltonianRoute::ExactRatio => "exact_ratio",
            HamiltonianRoute::FiniteDifference => "finite_difference",
            HamiltonianRoute::Asymptotic => "asymptotic",
        })
    }
}

/// One evaluation of `h(t)`.
///
/// `ill_conditioned` is set when `|a(t)|` has dropped below a thousandth of
/// its envelope `N e^{-γ⁰t/2ħ} + |c₀|/t`, which happens where the pole and
/// background terms interfere destructively.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianSample {
    pub t: f64,
    pub h: ComplexValue,
    pub energy: f64,
    pub rate: f64,
    pub route: HamiltonianRoute,
    pub ill_conditioned: bool,
}

impl HamiltonianSample {
    fn new(t: f64, h: ComplexValue, route: HamiltonianRoute, ill_conditioned: bool) -> Self {
        HamiltonianSample {
            t,
            h,
            energy: h.re,
            rate: -2.0 * h.im,
            route,
            ill_conditioned,
        }
    }
}

fn check_positive_time(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("time must be positive and finite, got {t}")));
    }
    Ok(())
}

fn check_amplitude(d: &NormalizedDensity, t: f64, s: f64, b: ComplexValue) -> Result<bool> {
    let magnitude = b.norm();
    if !(magnitude >= AMPLITUDE_FLOOR) {
        return Err(Error::AmplitudeVanishing { t, magnitude });
    }
    Ok(magnitude < CONDITIONING_FRACTION * reduced_envelope(d, s))
}

/// `h(t) = h⁰ + Δa(t)/a(t)`.
///
/// Evaluated as `(h⁰ a + Δa)/a`: with `z₁ = s/2 - ixs`, `z₂ = -s/2 - ixs` the
/// background part of the numerator collapses to
/// `-(Nγ⁰/2πs)[E2s(z₁) - E2s(z₂)]`, `E2s(z) = e^z E2(z)`, so the large
/// `E⁰` never has to cancel against `Re Δa/a` at late times.
pub fn effective_hamiltonian(d: &NormalizedDensity, t: f64) -> Result<HamiltonianSample> {
    check_positive_time(t)?;
    let p = d.params();
    let s = p.scaled_time(t);
    let (b, _) = reduced_amplitude(d, s)?;
    let flag = check_amplitude(d, t, s, b)?;
    let x = p.ratio();
    let n = d.norm();
    let z1 = ComplexValue::new(0.5 * s, -x * s);
    let z2 = ComplexValue::new(-0.5 * s, -x * s);
    let pole = n * z2.exp();
    let background = exp_integral_e2_scaled(z1)? - exp_integral_e2_scaled(z2)?;
    let numerator = ComplexValue::new(x, -0.5) * pole - n / (2.0 * PI * s) * background;
    let h = p.e_min + p.gamma0 * numerator / b;
    Ok(HamiltonianSample::new(t, h, HamiltonianRoute::ExactRatio, flag))
}

/// `h⁰ + Δa/a` formed literally; used to cross-check the rearranged form.
pub fn effective_hamiltonian_direct(d: &NormalizedDensity, t: f64) -> Result<HamiltonianSample> {
    check_positive_time(t)?;
    let p = d.params();
    let s = p.scaled_time(t);
    let (b, _) = reduced_amplitude(d, s)?;
    let flag = check_amplitude(d, t, s, b)?;
    let delta = reduced_delta(d, s)?;
    let h = p.e_min + p.gamma0 * (ComplexValue::new(p.ratio(), -0.5) + delta / b);
    Ok(HamiltonianSample::new(t, h, HamiltonianRoute::ExactRatio, flag))
}

/// Initial Ridders steps in `s = γ⁰t/ħ`: the first resolves the `e^{-ixs}`
/// oscillation of the pole term, the second the slow variation of the
/// exponential-integral terms. Both stay inside `(0, s)`.
pub fn fd_steps(d: &NormalizedDensity, t: f64) -> (f64, f64) {
    let s = d.params().scaled_time(t);
    let x = d.params().ratio();
    let smooth = (0.05 * s.max(1.0)).min(0.25 * s);
    ((0.5 / (1.0 + x)).min(smooth), smooth)
}

/// `h(t) = iħ ȧ/a` with `ȧ` from Ridders-extrapolated central differences
/// of the closed form, taken term by term so that each difference quotient
/// acts on a well-conditioned function. Needs `t` to exceed twice the step.
pub fn effective_hamiltonian_fd(d: &NormalizedDensity, t: f64) -> Result<HamiltonianSample> {
    check_positive_time(t)?;
    let p = d.params();
    let s = p.scaled_time(t);
    let (b, _) = reduced_amplitude(d, s)?;
    let flag = check_amplitude(d, t, s, b)?;
    let x = p.ratio();
    let (pole_step, smooth_step) = fd_steps(d, t);
    let n = d.norm();
    let pole = ridders_derivative(|u| Ok(n * ComplexValue::new(-0.5 * u, -x * u).exp()), s, pole_step)?;
    let e1_term = |re: f64| {
        ridders_derivative(
            |u| exp_integral_e1_scaled(ComplexValue::new(re * u, -x * u)),
            s,
            smooth_step,
        )
    };
    let bracket = e1_term(0.5)?.value - e1_term(-0.5)?.value;
    let weight = ComplexValue::new(0.0, -n / (2.0 * PI));
    let derivative = pole.value + weight * bracket;
    let h = p.e_min + p.gamma0 * ComplexValue::i() * derivative / b;
    Ok(HamiltonianSample::new(t, h, HamiltonianRoute::FiniteDifference, flag))
}

/// `h(t) ≃ E_min - iħ/t - 2(E⁰ - E_min)ħ²/(|h⁰ - E_min|² t²)`.
pub fn hamiltonian_asymptotic(d: &NormalizedDensity, t: f64) -> Result<HamiltonianSample> {
    check_positive_time(t)?;
    let p = d.params();
    let u = p.hbar / t;
    let energy = p.e_min - 2.0 * (p.e0 - p.e_min) * u * u / p.pole_distance_sq();
    let h = ComplexValue::new(energy, -u);
    Ok(HamiltonianSample::new(t, h, HamiltonianRoute::Asymptotic, false))
}

/// Exact-ratio samples on a grid of times.
pub fn sweep_hamiltonian(d: &NormalizedDensity, times: &[f64]) -> Result<Vec<HamiltonianSample>> {
    times.iter().map(|&t| effective_hamiltonian(d, t)).collect()
}

/// Asymptotic amplitude `a(t) = e^{-iE_min t/ħ} Σ_k c_k t^{-λ-k}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerLawModel {
    pub e_min: f64,
    pub lambda: f64,
    pub coefficients: Vec<ComplexValue>,
    pub hbar: f64,
}

impl PowerLawModel {
    pub fn new(e_min: f64, lambda: f64, coefficients: Vec<ComplexValue>, hbar: f64) -> Result<Self> {
        let m = PowerLawModel {
            e_min,
            lambda,
            coefficients,
            hbar,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.e_min.is_finite() {
            return Err(Error::InvalidParams("e_min must be finite".into()));
        }
        if !(self.lambda > 0.0) || !self.lambda.is_finite() {
            return Err(Error::InvalidParams(format!("lambda must be positive, got {}", self.lambda)));
        }
        if !(self.hbar > 0.0) || !self.hbar.is_finite() {
            return Err(Error::InvalidParams(format!("hbar must be positive, got {}", self.hbar)));
        }
        match self.coefficients.first() {
            Some(c0) if c0.norm() > 0.0 => {}
            _ => return Err(Error::InvalidParams("leading coefficient must be non-zero".into())),
        }
        if self.coefficients.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidParams("coefficients must be finite".into()));
        }
        Ok(())
    }

    /// `Σ c_k t^{-k}` and `Σ -(λ+k) c_k t^{-k-1}`, i.e. the series and its
    /// derivative with `t^{-λ}` factored out, plus the magnitude sum.
    fn reduced_sums(&self, t: f64) -> (ComplexValue, ComplexValue, f64) {
        let mut sum = ComplexValue::new(0.0, 0.0);
        let mut dsum = ComplexValue::new(0.0, 0.0);
        let mut scale = 0.0;
        let mut inv = 1.0;
        for (k, c) in self.coefficients.iter().enumerate() {
            let term = c * inv;
            sum += term;
            dsum -= term * ((self.lambda + k as f64) / t);
            scale += term.norm();
            inv /= t;
        }
        (sum, dsum, scale)
    }

    pub fn amplitude(&self, t: f64) -> Result<ComplexValue> {
        check_positive_time(t)?;
        let (sum, _, _) = self.reduced_sums(t);
        let phase = ComplexValue::from_polar(1.0, -self.e_min * t / self.hbar);
        Ok(sum * t.powf(-self.lambda) * phase)
    }
}

/// `h(t) = E_min + iħ S'(t)/S(t)` for the finite series `S(t) = Σ c_k t^{-λ-k}`.
pub fn powerlaw_hamiltonian(m: &PowerLawModel, t: f64) -> Result<HamiltonianSample> {
    check_positive_time(t)?;
    m.validate()?;
    let (sum, dsum, scale) = m.reduced_sums(t);
    if !(sum.norm() > 64.0 * f64::EPSILON * scale) || !sum.norm().is_normal() {
        return Err(Error::SeriesVanishing { t });
    }
    let h = m.e_min + ComplexValue::new(0.0, m.hbar) * dsum / sum;
    Ok(HamiltonianSample::new(t, h, HamiltonianRoute::Asymptotic, false))
}

/// Order-0 power-law fit with its residual diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct TailFit {
    pub model: PowerLawModel,
    /// Root-mean-square residual of `ln |a|`.
    pub rms_log_residual: f64,
    pub max_log_residual: f64,
    /// `log₁₀(t_max/t_min)`.
    pub span_decades: f64,
}

pub const MIN_FIT_SAMPLES: usize = 8;

/// Fits `|a(t)| = |c₀| t^{-λ}` by least squares in log-log coordinates and
/// takes `arg c₀` as the circular mean of `arg(a e^{iE_min t/ħ})`.
///
/// The samples should all lie deep in the power-law era (beyond about
/// five crossover times); the fit cannot check that itself.
pub fn fit_powerlaw_tail(samples: &[AmplitudeSample], e_min: f64, hbar: f64) -> Result<TailFit> {
    if samples.len() < MIN_FIT_SAMPLES {
        return Err(Error::IllConditionedFit(format!(
            "need at least {MIN_FIT_SAMPLES} samples, got {}",
            samples.len()
        )));
    }
    let mut points = Vec::with_capacity(samples.len());
    let (mut cos_sum, mut sin_sum) = (0.0, 0.0);
    for sample in samples {
        let magnitude = sample.value.norm();
        if !(sample.t > 0.0) || !(magnitude > 0.0) || !sample.t.is_finite() || !magnitude.is_finite() {
            return Err(Error::IllConditionedFit(format!(
                "sample at t = {} has no usable logarithm",
                sample.t
            )));
        }
        points.push((sample.t.ln(), magnitude.ln()));
        let reduced = sample.value * ComplexValue::from_polar(1.0, e_min * sample.t / hbar);
        let unit = reduced / magnitude;
        cos_sum += unit.re;
        sin_sum += unit.im;
    }
    let (t_min, t_max) = points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.0), hi.max(p.0)));
    let span_decades = (t_max - t_min) / std::f64::consts::LN_10;
    if span_decades < 1.0 - 1e-9 {
        return Err(Error::IllConditionedFit(format!(
            "time span covers {span_decades:.3} decades, need at least one"
        )));
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residuals: Vec<f64> = points.iter().map(|p| p.1 - intercept - slope * p.0).collect();
    let rms_log_residual = (residuals.iter().map(|r| r * r).sum::<f64>() / n).sqrt();
    let max_log_residual = residuals.iter().fold(0.0f64, |m, r| m.max(r.abs()));
    let phase = sin_sum.atan2(cos_sum);
    let c0 = ComplexValue::from_polar(intercept.exp(), phase);
    let model = PowerLawModel::new(e_min, -slope, vec![c0], hbar)
        .map_err(|e| Error::IllConditionedFit(format!("fitted model rejected: {e}")))?;
    Ok(TailFit {
        model,
        rms_log_residual,
        max_log_residual,
        span_decades,
    })
}
