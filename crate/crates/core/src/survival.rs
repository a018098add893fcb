//! Survival amplitude `a(t) = ⟨φ|φ(t)⟩`, its correction term `Δa(t)` and
//! the decay law `P(t) = |a(t)|²`.
//!
//! Three routes evaluate `a(t)`:
//!
//! * **closed form** in terms of the scaled exponential integral; the
//!   production path for every `t ≥ 0`;
//! * **quadrature** of the defining Fourier integral over the density; an
//!   independent cross-check;
//! * **asymptotic**: the exponential pole term plus the leading inverse
//!   powers of `t`.
//!
//! Writing `s = γ⁰t/ħ`, `x = (E⁰ - E_min)/γ⁰`, `z₁ = s/2 - ixs` and
//! `z₂ = -s/2 - ixs`, the closed form is
//!
//! ```text
//! a(t) e^{iE_min t/ħ} = N e^{z₂} - (iN/2π) [E1s(z₁) - E1s(z₂)],   E1s(z) = e^z E1(z)
//! ```
//!
//! which never forms the overflowing factor `e^{γ⁰t/ħ}` separately.

use crate::crossover::solve_crossover;
use crate::density::NormalizedDensity;
use crate::error::{Error, Result};
use crate::numerics::{
    exp_integral_e1_scaled, integrate_oscillatory_with_breakpoints, ComplexValue, QuadratureSpec,
};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;

/// Evaluation route carried by each sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AmplitudeRoute {
    ClosedForm,
    Quadrature,
    Asymptotic,
}

impl fmt::Display for AmplitudeRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AmplitudeRoute::ClosedForm => "closed_form",
            AmplitudeRoute::Quadrature => "quadrature",
            AmplitudeRoute::Asymptotic => "asymptotic",
        })
    }
}

/// One evaluation of `a(t)`. `est_error` is an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeSample {
    pub t: f64,
    pub value: ComplexValue,
    pub route: AmplitudeRoute,
    pub est_error: f64,
}

impl AmplitudeSample {
    /// Survival probability `P(t) = |a(t)|²`.
    pub fn probability(&self) -> f64 {
        self.value.norm_sqr()
    }
}

/// Coefficients of the inverse-power background,
/// `a(t) ≈ N e^{-ih⁰t/ħ} + e^{-iE_min t/ħ} Σ_k coefficients[k] / t^{k+1}`,
/// in the caller's units (coefficient `k` carries `ħ^{k+1}`).
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticSeriesTerms {
    pub order: usize,
    pub coefficients: Vec<ComplexValue>,
}

fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::Domain(format!("time must be finite and non-negative, got {t}")));
    }
    Ok(())
}

fn threshold_phase(d: &NormalizedDensity, t: f64) -> ComplexValue {
    let p = d.params();
    if p.e_min == 0.0 {
        ComplexValue::new(1.0, 0.0)
    } else {
        ComplexValue::from_polar(1.0, -p.e_min * t / p.hbar)
    }
}

fn arguments(x: f64, s: f64) -> (ComplexValue, ComplexValue) {
    (ComplexValue::new(0.5 * s, -x * s), ComplexValue::new(-0.5 * s, -x * s))
}

/// `a(t) e^{iE_min t/ħ}` at dimensionless time `s`, with an absolute error
/// estimate.
pub(crate) fn reduced_amplitude(d: &NormalizedDensity, s: f64) -> Result<(ComplexValue, f64)> {
    let n = d.norm();
    let x = d.params().ratio();
    if s == 0.0 {
        // Limit of the bracket: E1(z₁) - E1(z₂) → -2i·arctan(1/(2x)).
        let value = n * (1.0 - (0.5 / x).atan() / PI);
        return Ok((ComplexValue::new(value, 0.0), 4.0 * f64::EPSILON));
    }
    let (z1, z2) = arguments(x, s);
    let f1 = exp_integral_e1_scaled(z1)?;
    let f2 = exp_integral_e1_scaled(z2)?;
    let pole = n * z2.exp();
    let weight = n / (2.0 * PI);
    let background = ComplexValue::new(0.0, -weight) * (f1 - f2);
    let scale = pole.norm() + weight * (f1.norm() + f2.norm());
    Ok((pole + background, 1e-13 * scale))
}

/// `Δa(t) e^{iE_min t/ħ} / γ⁰` at dimensionless time `s > 0`.
pub(crate) fn reduced_delta(d: &NormalizedDensity, s: f64) -> Result<ComplexValue> {
    let (z1, _) = arguments(d.params().ratio(), s);
    Ok(d.norm() / (2.0 * PI) * exp_integral_e1_scaled(z1)?)
}

/// Magnitude sum of the pole and leading background terms in reduced
/// units; used to judge near-cancellations of `a(t)`.
pub(crate) fn reduced_envelope(d: &NormalizedDensity, s: f64) -> f64 {
    let x = d.params().ratio();
    let n = d.norm();
    n * (-0.5 * s).exp() + n / (2.0 * PI) / ((x * x + 0.25) * s)
}

/// `a(t)` from the closed form. Finite for all `t ≥ 0`; no intermediate
/// overflows for `γ⁰t/ħ` up to at least 10⁵.
pub fn amplitude_closed_form(d: &NormalizedDensity, t: f64) -> Result<AmplitudeSample> {
    check_time(t)?;
    let s = d.params().scaled_time(t);
    let (reduced, est_error) = reduced_amplitude(d, s)?;
    Ok(AmplitudeSample {
        t,
        value: reduced * threshold_phase(d, t),
        route: AmplitudeRoute::ClosedForm,
        est_error,
    })
}

/// Quadrature settings used by [`amplitude_quadrature`] when the caller
/// has no preference.
pub fn default_quadrature_spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

/// `a(t)` by direct quadrature of `(N/2π) ∫ γ⁰ e^{-iEt/ħ} / ((E-E⁰)² + (γ⁰/2)²) dE`
/// over `[E_min, ∞)`.
pub fn amplitude_quadrature(
    d: &NormalizedDensity,
    t: f64,
    spec: &QuadratureSpec,
) -> Result<AmplitudeSample> {
    check_time(t)?;
    let s = d.params().scaled_time(t);
    let x = d.params().ratio();
    let integral = integrate_oscillatory_with_breakpoints(
        |eps| d.reduced_lorentzian(eps),
        0.0,
        s,
        &[x],
        spec,
    )?;
    let weight = d.norm() / (2.0 * PI);
    Ok(AmplitudeSample {
        t,
        value: weight * integral.value * threshold_phase(d, t),
        route: AmplitudeRoute::Quadrature,
        est_error: weight * integral.error,
    })
}

/// Inverse-power coefficients of `a(t)` up to `order` terms, from the
/// large-argument expansion `E1s(z) ~ Σ_k (-1)^k k!/z^{k+1}`.
pub fn asymptotic_series_terms(d: &NormalizedDensity, order: usize) -> AsymptoticSeriesTerms {
    let x = d.params().ratio();
    let tau = d.params().lifetime();
    let w1 = ComplexValue::new(0.5, -x);
    let w2 = ComplexValue::new(-0.5, -x);
    let weight = ComplexValue::new(0.0, -d.norm() / (2.0 * PI));
    let mut coefficients = Vec::with_capacity(order);
    let mut factorial = 1.0;
    let mut p1 = w1.inv();
    let mut p2 = w2.inv();
    let mut tau_pow = tau;
    for k in 0..order {
        if k > 0 {
            factorial *= k as f64;
            p1 /= w1;
            p2 /= w2;
            tau_pow *= tau;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        coefficients.push(weight * (sign * factorial * tau_pow) * (p1 - p2));
    }
    AsymptoticSeriesTerms {
        order,
        coefficients,
    }
}

/// Exponential pole term `N e^{-ih⁰t/ħ}` alone.
pub fn pole_term(d: &NormalizedDensity, t: f64) -> Result<ComplexValue> {
    check_time(t)?;
    let s = d.params().scaled_time(t);
    let (_, z2) = arguments(d.params().ratio(), s);
    Ok(d.norm() * z2.exp() * threshold_phase(d, t))
}

/// Long-time form of `a(t)`: pole term plus `order ∈ {1, 2}` inverse
/// powers. `est_error` is the magnitude of the first omitted power.
pub fn amplitude_asymptotic(d: &NormalizedDensity, t: f64, order: usize) -> Result<AmplitudeSample> {
    check_time(t)?;
    if t == 0.0 {
        return Err(Error::Domain("asymptotic amplitude needs t > 0".into()));
    }
    if !(1..=2).contains(&order) {
        return Err(Error::Domain(format!("order must be 1 or 2, got {order}")));
    }
    let terms = asymptotic_series_terms(d, order + 1);
    let mut background = ComplexValue::new(0.0, 0.0);
    let mut t_pow = t;
    for c in &terms.coefficients[..order] {
        background += c / t_pow;
        t_pow *= t;
    }
    let omitted = terms.coefficients[order].norm() / t_pow;
    Ok(AmplitudeSample {
        t,
        value: pole_term(d, t)? + background * threshold_phase(d, t),
        route: AmplitudeRoute::Asymptotic,
        est_error: omitted,
    })
}

/// `Δa(t) = iħ ∂a/∂t - h⁰ a(t)`, from the exponential integral of `z₁`.
/// Carries units of energy.
pub fn delta_amplitude(d: &NormalizedDensity, t: f64) -> Result<ComplexValue> {
    check_time(t)?;
    if t == 0.0 {
        return Err(Error::Domain("Δa(t) diverges at t = 0".into()));
    }
    let s = d.params().scaled_time(t);
    Ok(d.params().gamma0 * reduced_delta(d, s)? * threshold_phase(d, t))
}

/// Decay law `P(t) = |a(t)|²` from the closed form.
pub fn decay_law(d: &NormalizedDensity, t: f64) -> Result<f64> {
    Ok(amplitude_closed_form(d, t)?.probability())
}

/// Time beyond which the asymptotic route is reported next to the closed
/// form: three crossover times.
pub fn asymptotic_threshold(d: &NormalizedDensity) -> Result<f64> {
    let crossing = solve_crossover(d)?;
    Ok(3.0 * crossing.t_as(d.params()))
}

/// Closed-form samples on a grid of times.
pub fn sweep_closed_form(d: &NormalizedDensity, times: &[f64]) -> Result<Vec<AmplitudeSample>> {
    times.iter().map(|&t| amplitude_closed_form(d, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::ResonanceParams;

    fn demo(x: f64) -> NormalizedDensity {
        NormalizedDensity::new(ResonanceParams::from_ratio(0.0, x, 1.0, 1.0).unwrap()).unwrap()
    }

    #[test]
    fn unit_amplitude_at_zero() {
        for &x in &[1.0, 10.0, 100.0, 1e4] {
            let a = amplitude_closed_form(&demo(x), 0.0).unwrap();
            assert!((a.value - 1.0).norm() < 1e-14);
        }
    }

    #[test]
    fn small_time_limit_is_continuous() {
        let d = demo(10.0);
        let a = amplitude_closed_form(&d, 1e-12).unwrap();
        assert!((a.value - 1.0).norm() < 1e-9);
    }

    #[test]
    fn negative_time_rejected() {
        let d = demo(10.0);
        assert!(amplitude_closed_form(&d, -1.0).is_err());
        assert!(amplitude_asymptotic(&d, 0.0, 1).is_err());
        assert!(amplitude_asymptotic(&d, 1.0, 3).is_err());
        assert!(delta_amplitude(&d, 0.0).is_err());
    }

    #[test]
    fn exponential_era() {
        let d = demo(100.0);
        let a = amplitude_closed_form(&d, 1.0).unwrap();
        assert!((a.value.norm() - (-0.5f64).exp()).abs() < 1e-3);
        assert!((decay_law(&d, 1.0).unwrap() - (-1.0f64).exp()).abs() < 2e-3);
    }

    #[test]
    fn pole_term_alone_is_exponential() {
        let d = demo(100.0);
        for &t in &[0.5, 3.0, 20.0] {
            let p = pole_term(&d, t).unwrap().norm_sqr();
            let expected = d.norm().powi(2) * (-t).exp();
            assert!((p / expected - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn series_coefficients_match_explicit_forms() {
        let d = demo(100.0);
        let p = d.params();
        let terms = asymptotic_series_terms(&d, 2);
        let w = d.norm() / (2.0 * PI);
        let c0 = ComplexValue::new(0.0, -w * p.gamma0 * p.hbar / p.pole_distance_sq());
        let c1 = ComplexValue::new(
            -2.0 * w * (p.e0 - p.e_min) * p.gamma0 * p.hbar * p.hbar / p.pole_distance_sq().powi(2),
            0.0,
        );
        assert!((terms.coefficients[0] - c0).norm() < 1e-14 * c0.norm());
        assert!((terms.coefficients[1] - c1).norm() < 1e-12 * c1.norm());
    }

    #[test]
    fn large_scaled_time_stays_finite() {
        let d = demo(100.0);
        let a = amplitude_closed_form(&d, 1e5).unwrap();
        assert!(a.value.re.is_finite() && a.value.im.is_finite());
        assert!(a.value.norm() > 0.0);
    }

    #[test]
    fn threshold_phase_only_rotates() {
        let shifted = NormalizedDensity::new(ResonanceParams::from_ratio(3.0, 10.0, 1.0, 1.0).unwrap()).unwrap();
        let base = demo(10.0);
        for &t in &[0.3, 7.0] {
            let a = amplitude_closed_form(&shifted, t).unwrap().value;
            let b = amplitude_closed_form(&base, t).unwrap().value;
            assert!((a.norm() - b.norm()).abs() < 1e-14);
            assert!((a - b * ComplexValue::from_polar(1.0, -3.0 * t)).norm() < 1e-13);
        }
    }
}
