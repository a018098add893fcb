//! Multi-line asymptotic-energy diagnostics for a receding source.
//!
//! At late times every line's instantaneous energy approaches the common
//! threshold, `E_j^∞(t) ≃ E_min - 2 g_j ħ²/t²` with
//! `g_j = (E_j⁰ - E_min)/|h_j⁰ - E_min|²`. Differences of asymptotic
//! energies therefore shrink like `1/t²`, while their double ratios are
//! time independent and differ from the rest-frame double ratios. A
//! longitudinal Doppler shift multiplies every energy by
//! `κ = (1 - β)/√(1 - β²)`, which cancels from any double ratio.

use crate::crossover::solve_crossover;
use crate::density::{NormalizedDensity, ResonanceParams};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::HashSet;
use std::io::Read;
use std::path::Path;

/// One labelled resonance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralLine {
    pub id: String,
    pub params: ResonanceParams,
}

impl SpectralLine {
    pub fn new(id: impl Into<String>, params: ResonanceParams) -> Result<Self> {
        params.validate()?;
        Ok(SpectralLine { id: id.into(), params })
    }

    /// `(E⁰ - E_min)/|h⁰ - E_min|²`.
    pub fn asymptotic_weight(&self) -> f64 {
        (self.params.e0 - self.params.e_min) / self.params.pole_distance_sq()
    }

    /// Crossover time of this line in the caller's time unit.
    pub fn crossover_time(&self) -> Result<f64> {
        let d = NormalizedDensity::new(self.params)?;
        Ok(solve_crossover(&d)?.t_as(&self.params))
    }
}

/// An ordered set of lines with unique ids.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineCatalog {
    lines: Vec<SpectralLine>,
    shared_e_min: Option<f64>,
}

#[derive(Debug, serde::Deserialize)]
struct CatalogRow {
    id: String,
    e0: f64,
    gamma0: f64,
    #[serde(default)]
    e_min: Option<f64>,
}

impl LineCatalog {
    /// Builds a catalog; a `shared_e_min` replaces every line's own threshold.
    pub fn new(lines: Vec<SpectralLine>, shared_e_min: Option<f64>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::InvalidParams("catalog holds no lines".into()));
        }
        let mut seen = HashSet::new();
        let mut resolved = Vec::with_capacity(lines.len());
        for mut line in lines {
            if !seen.insert(line.id.clone()) {
                return Err(Error::InvalidParams(format!("duplicate line id {:?}", line.id)));
            }
            if let Some(e_min) = shared_e_min {
                line.params.e_min = e_min;
            }
            line.params
                .validate()
                .map_err(|e| Error::InvalidParams(format!("line {:?}: {e}", line.id)))?;
            resolved.push(line);
        }
        Ok(LineCatalog {
            lines: resolved,
            shared_e_min,
        })
    }

    /// Reads CSV with header `id,e0,gamma0[,e_min]`. Rows without an
    /// `e_min` value take `default_e_min`; if no row carries one, the
    /// catalog's shared threshold is set to `default_e_min`.
    pub fn from_csv_reader<R: Read>(reader: R, hbar: f64, default_e_min: f64) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let mut lines = Vec::new();
        let mut any_e_min = false;
        for (row_no, record) in rdr.deserialize::<CatalogRow>().enumerate() {
            let row = record.map_err(|e| Error::InvalidParams(format!("catalog row {}: {e}", row_no + 1)))?;
            any_e_min |= row.e_min.is_some();
            let params = ResonanceParams::new(row.e_min.unwrap_or(default_e_min), row.e0, row.gamma0, hbar)
                .map_err(|e| Error::InvalidParams(format!("line {:?}: {e}", row.id)))?;
            lines.push(SpectralLine { id: row.id, params });
        }
        let shared = (!any_e_min).then_some(default_e_min);
        LineCatalog::new(lines, shared)
    }

    pub fn from_csv_path(path: &Path, hbar: f64, default_e_min: f64) -> Result<Self> {
        let file = std::fs::File::open(path)
            .map_err(|e| Error::InvalidParams(format!("cannot open catalog {}: {e}", path.display())))?;
        LineCatalog::from_csv_reader(file, hbar, default_e_min)
    }

    pub fn lines(&self) -> &[SpectralLine] {
        &self.lines
    }

    pub fn shared_e_min(&self) -> Option<f64> {
        self.shared_e_min
    }

    pub fn get(&self, id: &str) -> Option<&SpectralLine> {
        self.lines.iter().find(|l| l.id == id)
    }

    /// The threshold shared by all lines, if there is one.
    pub fn common_e_min(&self) -> Result<f64> {
        if let Some(e) = self.shared_e_min {
            return Ok(e);
        }
        let first = self.lines[0].params.e_min;
        if self.lines.iter().all(|l| l.params.e_min == first) {
            Ok(first)
        } else {
            Err(Error::MismatchedEmin)
        }
    }

    /// Largest crossover time over the catalog.
    pub fn max_crossover_time(&self) -> Result<f64> {
        self.lines
            .iter()
            .try_fold(0.0f64, |m, l| Ok(m.max(l.crossover_time()?)))
    }
}

/// Four lines with `E_min = 0`, `ħ = 1` and `(E⁰, γ⁰)` equal to
/// `(1, 0.01)`, `(2, 0.02)`, `(3, 0.01)`, `(4, 0.04)`.
pub fn demo_catalog() -> LineCatalog {
    let specs = [("L1", 1.0, 0.01), ("L2", 2.0, 0.02), ("L3", 3.0, 0.01), ("L4", 4.0, 0.04)];
    let lines = specs
        .iter()
        .map(|&(id, e0, gamma0)| SpectralLine {
            id: id.to_string(),
            params: ResonanceParams::new(0.0, e0, gamma0, 1.0).expect("demo parameters are valid"),
        })
        .collect();
    LineCatalog::new(lines, Some(0.0)).expect("demo catalog is valid")
}

/// Source moving away from the observer at `β = v/c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DopplerFrame {
    beta: f64,
}

impl DopplerFrame {
    pub fn new(beta: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&beta) {
            return Err(Error::InvalidParams(format!("beta must lie in [0, 1), got {beta}")));
        }
        Ok(DopplerFrame { beta })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `κ = (1 - β)/√(1 - β²) = √((1 - β)/(1 + β))`.
    pub fn kappa(&self) -> f64 {
        ((1.0 - self.beta) / (1.0 + self.beta)).sqrt()
    }
}

fn check_time(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("time must be positive and finite, got {t}")));
    }
    Ok(())
}

fn check_common(lines: &[&SpectralLine]) -> Result<()> {
    let first = &lines[0].params;
    for l in &lines[1..] {
        if l.params.e_min != first.e_min {
            return Err(Error::MismatchedEmin);
        }
        if l.params.hbar != first.hbar {
            return Err(Error::InvalidParams("lines use different values of hbar".into()));
        }
    }
    Ok(())
}

/// `E^∞(t) = E_min - 2(E⁰ - E_min)ħ²/(|h⁰ - E_min|² t²)`. Meaningful only
/// beyond the line's crossover time ([`SpectralLine::crossover_time`]).
pub fn asymptotic_energy(line: &SpectralLine, t: f64) -> Result<f64> {
    check_time(t)?;
    let u = line.params.hbar / t;
    Ok(line.params.e_min - 2.0 * line.asymptotic_weight() * u * u)
}

/// `E₁^∞(t) - E₂^∞(t) = -2(g₁ - g₂)ħ²/t²`.
pub fn energy_difference_asymptotic(l1: &SpectralLine, l2: &SpectralLine, t: f64) -> Result<f64> {
    check_time(t)?;
    check_common(&[l1, l2])?;
    let u = l1.params.hbar / t;
    Ok(-2.0 * (l1.asymptotic_weight() - l2.asymptotic_weight()) * u * u)
}

/// `(E₁^∞ - E₂^∞)/(E₃^∞ - E₄^∞) = (g₁ - g₂)/(g₃ - g₄)`, independent of `t`.
pub fn ratio_diagnostic(
    l1: &SpectralLine,
    l2: &SpectralLine,
    l3: &SpectralLine,
    l4: &SpectralLine,
) -> Result<f64> {
    check_common(&[l1, l2, l3, l4])?;
    let den = l3.asymptotic_weight() - l4.asymptotic_weight();
    if den == 0.0 {
        return Err(Error::DegenerateDenominator);
    }
    Ok((l1.asymptotic_weight() - l2.asymptotic_weight()) / den)
}

/// `(E₁⁰ - E₂⁰)/(E₃⁰ - E₄⁰)`.
pub fn rest_ratio(l1: &SpectralLine, l2: &SpectralLine, l3: &SpectralLine, l4: &SpectralLine) -> Result<f64> {
    double_ratio(l1.params.e0, l2.params.e0, l3.params.e0, l4.params.e0)
}

fn double_ratio(e1: f64, e2: f64, e3: f64, e4: f64) -> Result<f64> {
    let den = e3 - e4;
    if den == 0.0 {
        return Err(Error::DegenerateDenominator);
    }
    Ok((e1 - e2) / den)
}

/// Observed energy `κE`.
pub fn doppler_shift(frame: &DopplerFrame, e: f64) -> f64 {
    frame.kappa() * e
}

/// `(shifted double ratio, rest double ratio)` for four energies.
pub fn doppler_ratio_invariance_check(
    frame: &DopplerFrame,
    e1: f64,
    e2: f64,
    e3: f64,
    e4: f64,
) -> Result<(f64, f64)> {
    let rest = double_ratio(e1, e2, e3, e4)?;
    let shifted = double_ratio(
        doppler_shift(frame, e1),
        doppler_shift(frame, e2),
        doppler_shift(frame, e3),
        doppler_shift(frame, e4),
    )?;
    Ok((shifted, rest))
}

/// One row of [`observed_line_table`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObservedLine {
    pub id: String,
    pub e0: f64,
    pub e_inf: f64,
    pub e0_obs: f64,
    pub e_inf_obs: f64,
    /// Whether `|κE_i^∞ - κE_j^∞| < κ|E_i⁰ - E_j⁰|` holds against every
    /// other line `j`.
    pub delta_pair_check: bool,
}

/// Comparison of one pair of lines.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairCheck {
    pub first: String,
    pub second: String,
    pub observed_asymptotic_gap: f64,
    pub observed_rest_gap: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObservedTable {
    pub t: f64,
    pub kappa: f64,
    pub rows: Vec<ObservedLine>,
    pub pairs: Vec<PairCheck>,
}

/// Rest, asymptotic and Doppler-observed energies of every line at time
/// `t`, with the pairwise gap comparison. The observed asymptotic energy is
/// `κ E^∞(t)`.
pub fn observed_line_table(catalog: &LineCatalog, frame: &DopplerFrame, t: f64) -> Result<ObservedTable> {
    check_time(t)?;
    let kappa = frame.kappa();
    let lines = catalog.lines();
    let e_inf: Vec<f64> = lines
        .iter()
        .map(|l| asymptotic_energy(l, t))
        .collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    let mut ok = vec![true; lines.len()];
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let observed_asymptotic_gap = (kappa * e_inf[i] - kappa * e_inf[j]).abs();
            let observed_rest_gap = kappa * (lines[i].params.e0 - lines[j].params.e0).abs();
            let holds = observed_asymptotic_gap < observed_rest_gap;
            ok[i] &= holds;
            ok[j] &= holds;
            pairs.push(PairCheck {
                first: lines[i].id.clone(),
                second: lines[j].id.clone(),
                observed_asymptotic_gap,
                observed_rest_gap,
                holds,
            });
        }
    }
    let rows = lines
        .iter()
        .zip(&e_inf)
        .zip(ok)
        .map(|((l, &e), check)| ObservedLine {
            id: l.id.clone(),
            e0: l.params.e0,
            e_inf: e,
            e0_obs: kappa * l.params.e0,
            e_inf_obs: kappa * e,
            delta_pair_check: check,
        })
        .collect();
    Ok(ObservedTable { t, kappa, rows, pairs })
}
