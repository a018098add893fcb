//! Adaptive Gauss–Kronrod (10/21-point) quadrature on finite and
//! semi-infinite intervals, and a Fourier-type integrator for
//! `∫_{lower}^{∞} f(E) e^{-iωE} dE`.
//!
//! The oscillatory integrator walks the half-periods `π/ω` of the phase
//! factor. Inside each half-period the phase is evaluated relative to the
//! left edge, so successive contributions differ only by the exact sign
//! `(-1)^k`; no large phase arguments are ever formed. After a direct
//! region covering the features of `f`, the alternating partial sums are
//! accelerated with Wynn's epsilon algorithm.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::ops::{Add, AddAssign, Mul, Sub};

// Kronrod abscissae on [0, 1]; odd indices are the 10-point Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_5,
    0.973_906_528_517_171_720_078_0,
    0.930_157_491_355_708_226_001_2,
    0.865_063_366_688_984_510_732_1,
    0.780_817_726_586_416_897_063_7,
    0.679_409_568_299_024_406_234_3,
    0.562_757_134_668_604_683_339_0,
    0.433_395_394_129_247_190_799_3,
    0.294_392_862_701_460_198_131_1,
    0.148_874_338_981_631_210_884_8,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_06,
    0.032_558_162_307_964_727_478_82,
    0.054_755_896_574_351_996_031_38,
    0.075_039_674_810_919_952_767_04,
    0.093_125_454_583_697_605_535_07,
    0.109_387_158_802_297_641_899_2,
    0.123_491_976_262_065_851_078_0,
    0.134_709_217_311_473_325_928_1,
    0.142_775_938_577_060_080_797_1,
    0.147_739_104_901_338_491_374_8,
    0.149_445_554_002_916_905_664_9,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_57,
    0.149_451_349_150_580_593_145_8,
    0.219_086_362_515_982_043_995_5,
    0.269_266_719_309_996_355_091_2,
    0.295_524_224_714_752_870_173_9,
];

/// Values a quadrature rule can accumulate.
pub trait QuadValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> + AddAssign
{
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Tolerances and limits for the integrators.
///
/// `max_subdivisions` bounds the bisections of any single adaptive
/// integration and, separately, the number of half-period terms summed in
/// an oscillatory tail. `tail_truncation_multiplier` sets how far past the
/// last feature of the integrand (lower limit or breakpoint) direct
/// integration continues before tail acceleration takes over, in units of
/// `max(1, π/ω)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub tail_truncation_multiplier: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 0.0,
            max_subdivisions: 2000,
            tail_truncation_multiplier: 10.0,
        }
    }
}

impl QuadratureSpec {
    pub fn new(
        rel_tol: f64,
        abs_tol: f64,
        max_subdivisions: usize,
        tail_truncation_multiplier: f64,
    ) -> Result<Self> {
        let spec = Self {
            rel_tol,
            abs_tol,
            max_subdivisions,
            tail_truncation_multiplier,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if !(self.abs_tol >= 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "abs_tol must be non-negative, got {}",
                self.abs_tol
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::InvalidParams("max_subdivisions must be at least 1".into()));
        }
        if !(self.tail_truncation_multiplier >= 10.0 && self.tail_truncation_multiplier.is_finite())
        {
            return Err(Error::InvalidParams(format!(
                "tail_truncation_multiplier must be at least 10, got {}",
                self.tail_truncation_multiplier
            )));
        }
        Ok(())
    }
}

/// Result of an integration: value, error estimate, integrand evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral<T> {
    pub value: T,
    pub error: f64,
    pub evaluations: usize,
}

#[derive(Clone, Copy)]
struct Segment<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
    abs_value: f64,
}

impl<T> PartialEq for Segment<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl<T> Eq for Segment<T> {}
impl<T> PartialOrd for Segment<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Segment<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<T: QuadValue, F: Fn(f64) -> T>(f: &F, a: f64, b: f64) -> Segment<T> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc * WGK[10];
    let mut res_g = T::zero();
    let mut res_abs = fc.magnitude() * WGK[10];
    let mut fv1 = [T::zero(); 10];
    let mut fv2 = [T::zero(); 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        let sum = f1 + f2;
        res_k += sum * WGK[j];
        if j % 2 == 1 {
            res_g += sum * WG[j / 2];
        }
        res_abs += WGK[j] * (f1.magnitude() + f2.magnitude());
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[10] * (fc - mean).magnitude();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).magnitude() + (fv2[j] - mean).magnitude());
    }
    let scale = half.abs();
    let value = res_k * half;
    res_abs *= scale;
    res_asc *= scale;
    let mut err = ((res_k - res_g) * half).magnitude();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Segment {
        a,
        b,
        value,
        error: err,
        abs_value: res_abs,
    }
}

fn adaptive<T: QuadValue, F: Fn(f64) -> T>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<Integral<T>> {
    let first = gk21(f, a, b);
    let mut evaluations = 21;
    let mut total = first.value;
    let mut total_err = first.error;
    let mut total_abs = first.abs_value;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut subdivisions = 1;
    loop {
        let tol = abs_tol
            .max(rel_tol * total.magnitude())
            .max(50.0 * f64::EPSILON * total_abs);
        if total_err <= tol {
            break;
        }
        if subdivisions >= max_subdivisions {
            return Err(Error::NonConvergence {
                iterations: subdivisions,
                estimate: total_err,
            });
        }
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval cannot be split further in f64.
            return Err(Error::NonConvergence {
                iterations: subdivisions,
                estimate: total_err,
            });
        }
        let left = gk21(f, worst.a, mid);
        let right = gk21(f, mid, worst.b);
        evaluations += 42;
        subdivisions += 1;
        total = total - worst.value + left.value + right.value;
        total_err += left.error + right.error - worst.error;
        total_abs += left.abs_value + right.abs_value - worst.abs_value;
        heap.push(left);
        heap.push(right);
    }
    let mut value = T::zero();
    let mut error = 0.0;
    for seg in heap.iter() {
        value += seg.value;
        error += seg.error;
    }
    Ok(Integral {
        value,
        error,
        evaluations,
    })
}

fn check_finite(label: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{label} must be finite, got {v}")))
    }
}

/// Adaptive integral of `f` over the finite interval `[a, b]`.
pub fn integrate<T, F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<Integral<T>>
where
    T: QuadValue,
    F: Fn(f64) -> T,
{
    spec.validate()?;
    check_finite("lower limit", a)?;
    check_finite("upper limit", b)?;
    if a == b {
        return Ok(Integral {
            value: T::zero(),
            error: 0.0,
            evaluations: 0,
        });
    }
    adaptive(&f, a, b, spec.abs_tol, spec.rel_tol, spec.max_subdivisions)
}

/// Adaptive integral of `f` over `[lower, ∞)` via `E = lower + (1-u)/u`.
///
/// Suitable for integrands without sharp features far from `lower`; for
/// those use [`integrate_oscillatory_with_breakpoints`] with zero frequency.
pub fn integrate_semi_infinite<T, F>(f: F, lower: f64, spec: &QuadratureSpec) -> Result<Integral<T>>
where
    T: QuadValue,
    F: Fn(f64) -> T,
{
    spec.validate()?;
    check_finite("lower limit", lower)?;
    semi_infinite_tail(&f, lower, spec.abs_tol, spec.rel_tol, spec.max_subdivisions)
}

fn semi_infinite_tail<T: QuadValue, F: Fn(f64) -> T>(
    f: &F,
    lower: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<Integral<T>> {
    let mapped = |u: f64| {
        let e = lower + (1.0 - u) / u;
        f(e) * (1.0 / (u * u))
    };
    adaptive(&mapped, 0.0, 1.0, abs_tol, rel_tol, max_subdivisions)
}

/// `∫_{lower}^{∞} f(E) e^{-i·freq·E} dE` for absolutely integrable `f`.
pub fn integrate_oscillatory<F>(
    f: F,
    lower: f64,
    freq: f64,
    spec: &QuadratureSpec,
) -> Result<Integral<Complex64>>
where
    F: Fn(f64) -> f64,
{
    integrate_oscillatory_with_breakpoints(f, lower, freq, &[], spec)
}

/// As [`integrate_oscillatory`], with points where `f` has sharp features
/// (peaks, kinks). Intervals are split at these points and direct
/// integration extends past the largest of them.
pub fn integrate_oscillatory_with_breakpoints<F>(
    f: F,
    lower: f64,
    freq: f64,
    breakpoints: &[f64],
    spec: &QuadratureSpec,
) -> Result<Integral<Complex64>>
where
    F: Fn(f64) -> f64,
{
    spec.validate()?;
    check_finite("lower limit", lower)?;
    check_finite("frequency", freq)?;
    if freq < 0.0 {
        return Err(Error::Domain(format!("frequency must be non-negative, got {freq}")));
    }
    let mut points: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|p| p.is_finite() && *p > lower)
        .collect();
    points.sort_by(f64::total_cmp);
    points.dedup();
    if freq == 0.0 {
        non_oscillatory(&f, lower, &points, spec)
    } else {
        oscillatory(&f, lower, freq, &points, spec)
    }
}

/// Integrates over `[a, b]` split at the interior breakpoints.
fn pieces<T: QuadValue, F: Fn(f64) -> T>(
    f: &F,
    a: f64,
    b: f64,
    points: &[f64],
    abs_tol: f64,
    spec: &QuadratureSpec,
) -> Result<Integral<T>> {
    let mut edges = vec![a];
    edges.extend(points.iter().copied().filter(|&p| p > a && p < b));
    edges.push(b);
    let share = abs_tol / (edges.len() - 1) as f64;
    let mut out = Integral {
        value: T::zero(),
        error: 0.0,
        evaluations: 0,
    };
    for w in edges.windows(2) {
        let part = adaptive(f, w[0], w[1], share, spec.rel_tol, spec.max_subdivisions)?;
        out.value += part.value;
        out.error += part.error;
        out.evaluations += part.evaluations;
    }
    Ok(out)
}

fn non_oscillatory<F: Fn(f64) -> f64>(
    f: &F,
    lower: f64,
    points: &[f64],
    spec: &QuadratureSpec,
) -> Result<Integral<Complex64>> {
    let feature_end = points.last().copied().unwrap_or(lower);
    let cut = feature_end + spec.tail_truncation_multiplier;
    let head = pieces(f, lower, cut, points, 0.5 * spec.abs_tol, spec)?;
    let tail = semi_infinite_tail(f, cut, 0.5 * spec.abs_tol, spec.rel_tol, spec.max_subdivisions)?;
    Ok(Integral {
        value: Complex64::new(head.value + tail.value, 0.0),
        error: head.error + tail.error,
        evaluations: head.evaluations + tail.evaluations,
    })
}

/// Neumaier-compensated complex accumulator.
#[derive(Default, Clone, Copy)]
struct CompensatedSum {
    sum: Complex64,
    carry: Complex64,
}

impl CompensatedSum {
    fn add(&mut self, v: Complex64) {
        self.sum = Complex64::new(
            two_sum(self.sum.re, v.re, &mut self.carry.re),
            two_sum(self.sum.im, v.im, &mut self.carry.im),
        );
    }
    fn value(&self) -> Complex64 {
        self.sum + self.carry
    }
}

fn two_sum(s: f64, v: f64, carry: &mut f64) -> f64 {
    let t = s + v;
    if s.abs() >= v.abs() {
        *carry += (s - t) + v;
    } else {
        *carry += (v - t) + s;
    }
    t
}

/// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
/// estimate from the highest even column that could be formed.
fn wynn_epsilon(sums: &[Complex64]) -> Complex64 {
    let n = sums.len();
    let mut best = sums[n - 1];
    let mut prev = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut cur = sums.to_vec();
    for k in 1..n {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for j in 0..cur.len() - 1 {
            let diff = cur[j + 1] - cur[j];
            let scale = cur[j + 1].norm().max(cur[j].norm());
            if diff.norm() <= 1e-15 * scale || diff.norm() == 0.0 {
                return best;
            }
            next.push(prev[j + 1] + diff.inv());
        }
        prev = cur;
        cur = next;
        if k % 2 == 0 {
            best = *cur.last().expect("column is non-empty");
        }
    }
    best
}

const MAX_DIRECT_HALF_PERIODS: f64 = 5.0e7;
const WYNN_WINDOW: usize = 41;

fn oscillatory<F: Fn(f64) -> f64>(
    f: &F,
    lower: f64,
    freq: f64,
    points: &[f64],
    spec: &QuadratureSpec,
) -> Result<Integral<Complex64>> {
    let half = PI / freq;
    let feature_end = points.last().copied().unwrap_or(lower);
    let span = (feature_end - lower) + spec.tail_truncation_multiplier * half.max(1.0);
    let n_direct = (span / half).ceil();
    if n_direct > MAX_DIRECT_HALF_PERIODS {
        return Err(Error::NonConvergence {
            iterations: spec.max_subdivisions,
            estimate: f64::INFINITY,
        });
    }
    let n_direct = n_direct as usize;
    let base_phase = Complex64::from_polar(1.0, -freq * lower);

    let half_period = |k: usize| -> Result<Integral<Complex64>> {
        let start = lower + k as f64 * half;
        let g = |u: f64| Complex64::from_polar(f(start + u), -freq * u);
        let local: Vec<f64> = points
            .iter()
            .map(|p| p - start)
            .filter(|&u| u > 0.0 && u < half)
            .collect();
        let mut part = pieces(&g, 0.0, half, &local, 0.0, spec)?;
        if k % 2 == 1 {
            part.value = -part.value;
        }
        Ok(part)
    };

    let mut acc = CompensatedSum::default();
    let mut error = 0.0;
    let mut evaluations = 0;
    for k in 0..n_direct {
        let part = half_period(k)?;
        acc.add(part.value);
        error += part.error;
        evaluations += part.evaluations;
    }

    let mut sums = vec![acc.value()];
    let mut extrapolated: Vec<Complex64> = Vec::new();
    let mut best: Option<(Complex64, f64)> = None;
    let mut prev_term = f64::INFINITY;
    for i in 0..spec.max_subdivisions {
        let part = half_period(n_direct + i)?;
        acc.add(part.value);
        error += part.error;
        evaluations += part.evaluations;
        let raw = acc.value();
        sums.push(raw);
        let term = part.value.norm();
        let tol = spec.abs_tol.max(spec.rel_tol * raw.norm());
        if term <= 0.5 * tol && prev_term <= tol {
            return Ok(Integral {
                value: raw * base_phase,
                error: error + term,
                evaluations,
            });
        }
        prev_term = term;
        let window = &sums[sums.len().saturating_sub(WYNN_WINDOW)..];
        if window.len() >= 3 {
            let ext = wynn_epsilon(window);
            extrapolated.push(ext);
            if extrapolated.len() >= 3 {
                let m = extrapolated.len();
                let est = (ext - extrapolated[m - 2]).norm() + (ext - extrapolated[m - 3]).norm();
                let tol = spec.abs_tol.max(spec.rel_tol * ext.norm());
                if best.map_or(true, |(_, e)| est < e) {
                    best = Some((ext, est));
                }
                if est <= tol {
                    return Ok(Integral {
                        value: ext * base_phase,
                        error: error + est,
                        evaluations,
                    });
                }
            }
        }
    }
    Err(Error::NonConvergence {
        iterations: spec.max_subdivisions,
        estimate: best.map_or(f64::INFINITY, |(_, e)| e),
    })
}
