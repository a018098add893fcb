//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

pub mod reference;

use khalfin::{ComplexValue, NormalizedDensity, ResonanceParams};

pub fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

pub fn demo(x: f64) -> NormalizedDensity {
    NormalizedDensity::new(ResonanceParams::from_ratio(0.0, x, 1.0, 1.0).unwrap()).unwrap()
}

pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

pub fn rel_diff(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / b.norm()
}

/// `E1(z) = -γ - ln z + Σ_{k≥1} (-1)^{k+1} z^k/(k·k!)`, Kahan-summed until
/// the terms stop changing the sum.
pub fn e1_series_oracle(z: ComplexValue) -> ComplexValue {
    let gamma = 0.577_215_664_901_532_9;
    let mut sum = c(0.0, 0.0);
    let mut comp = c(0.0, 0.0);
    let mut power = c(1.0, 0.0);
    let mut k = 1usize;
    loop {
        power = power * z / k as f64;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let term = power * (sign / k as f64);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        if t == sum && k as f64 > z.norm() {
            break;
        }
        sum = t;
        k += 1;
        assert!(k < 1000);
    }
    -gamma - z.ln() + sum
}

/// `e^z E1(z) = 1/(z + 1/(1 + 1/(z + 2/(1 + 2/(z + …)))))`, evaluated from
/// the bottom up at a fixed depth.
pub fn e1_scaled_cf_oracle(z: ComplexValue, depth: usize) -> ComplexValue {
    let mut tail = z;
    for n in (1..=depth).rev() {
        let nf = n as f64;
        tail = z + nf / (1.0 + nf / tail);
    }
    1.0 / tail
}

/// Halley iteration for `w e^w = x` from the seed `ln(-x) - ln(-ln(-x))`
/// (lower branch) or `ln(1 + x)` (principal branch).
pub fn lambert_halley_oracle(lower: bool, x: f64) -> f64 {
    let mut w = if lower {
        let l = (-x).ln();
        if x > -0.3 {
            l - (-l).ln()
        } else {
            -1.0 - (2.0 * (1.0 + std::f64::consts::E * x)).max(0.0).sqrt()
        }
    } else if x < -0.3 {
        -1.0 + (2.0 * (1.0 + std::f64::consts::E * x)).max(0.0).sqrt()
    } else {
        x.ln_1p()
    };
    for _ in 0..100 {
        let ew = w.exp();
        let f = w * ew - x;
        if f == 0.0 {
            break;
        }
        let wp1 = w + 1.0;
        if wp1 == 0.0 {
            break;
        }
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        let next = w - step;
        if !next.is_finite() || next == w {
            break;
        }
        w = next;
    }
    w
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Composite Gauss-Legendre rule with `panels` equal panels.
pub fn composite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize, rule: &[(f64, f64)]) -> f64 {
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * h;
        let part: f64 = rule.iter().map(|&(x, w)| w * f(mid + 0.5 * h * x)).sum();
        total += 0.5 * h * part;
    }
    total
}

/// `∫_{E_min}^∞ ω(E) dE` by brute force: composite Gauss-Legendre within
/// `50γ⁰` of the peak, `E = E⁰ ± 50γ⁰/v` beyond it.
pub fn normalization_oracle(d: &NormalizedDensity) -> f64 {
    let p = d.params();
    let rule = gauss_legendre(20);
    let w = 50.0 * p.gamma0;
    let lo = (p.e0 - w).max(p.e_min);
    let mut total = composite(|e| d.density_at(e), lo, p.e0 + w, 400, &rule);
    let mapped = |sign: f64| {
        move |v: f64| {
            if v == 0.0 {
                0.0
            } else {
                d.density_at(p.e0 + sign * w / v) * w / (v * v)
            }
        }
    };
    total += composite(mapped(1.0), 0.0, 1.0, 400, &rule);
    if lo > p.e_min {
        total += composite(mapped(-1.0), w / (p.e0 - p.e_min), 1.0, 400, &rule);
    }
    total
}

/// Central differences at `h, h/2, h/4, h/8` combined by Richardson
/// extrapolation.
pub fn richardson_derivative<F: Fn(f64) -> ComplexValue>(f: F, t: f64, h: f64) -> ComplexValue {
    let mut table: Vec<ComplexValue> = (0..4)
        .map(|k| {
            let hk = h / f64::powi(2.0, k);
            (f(t + hk) - f(t - hk)) / (2.0 * hk)
        })
        .collect();
    let mut factor = 4.0;
    for level in 1..4 {
        for i in (level..4).rev() {
            table[i] = (factor * table[i] - table[i - 1]) / (factor - 1.0);
        }
        factor *= 4.0;
    }
    table[3]
}

/// Least-squares slope of `ys` against `xs`.
pub fn ls_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}
