//! Run configuration: a single JSON document whose fields the command-line
//! flags override.

use crate::density::ResonanceParams;
use crate::numerics::QuadratureSpec;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Sweep {
    pub t_start: f64,
    pub t_stop: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl Default for Sweep {
    fn default() -> Self {
        Sweep {
            t_start: 0.1,
            t_stop: 1000.0,
            points: 200,
            spacing: Spacing::Linear,
        }
    }
}

impl Sweep {
    pub fn validate(&self) -> Result<(), String> {
        if !self.t_start.is_finite() || !self.t_stop.is_finite() {
            return Err("sweep bounds must be finite".into());
        }
        if !(self.t_start < self.t_stop) {
            return Err(format!("t_start ({}) must be below t_stop ({})", self.t_start, self.t_stop));
        }
        if self.t_start < 0.0 {
            return Err("t_start must be non-negative".into());
        }
        if self.spacing == Spacing::Log && self.t_start <= 0.0 {
            return Err("log spacing needs t_start > 0".into());
        }
        if self.points < 2 {
            return Err(format!("points must be at least 2, got {}", self.points));
        }
        Ok(())
    }

    /// Grid times; both endpoints are hit exactly.
    pub fn times(&self) -> Vec<f64> {
        let n = self.points;
        let last = (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    return self.t_stop;
                }
                let f = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.t_start + (self.t_stop - self.t_start) * f,
                    Spacing::Log => (self.t_start.ln() + (self.t_stop.ln() - self.t_start.ln()) * f).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Outputs {
    pub format: Format,
    pub path: Option<PathBuf>,
}

impl Default for Outputs {
    fn default() -> Self {
        Outputs {
            format: Format::Csv,
            path: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub model: ResonanceParams,
    /// Free-text label for the energy unit; time is in units of `ħ` over it.
    pub energy_unit: String,
    pub sweep: Sweep,
    pub outputs: Outputs,
    pub tolerances: QuadratureSpec,
    pub catalog_path: Option<PathBuf>,
    pub beta: f64,
    /// Evaluation time for the redshift table; `None` selects fifty times
    /// the largest crossover time of the catalog.
    pub time: Option<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            model: ResonanceParams {
                e_min: 0.0,
                e0: 100.0,
                gamma0: 1.0,
                hbar: 1.0,
            },
            energy_unit: "gamma0".into(),
            sweep: Sweep::default(),
            outputs: Outputs::default(),
            tolerances: crate::survival::default_quadrature_spec(),
            catalog_path: None,
            beta: 0.0,
            time: None,
        }
    }
}

impl RunConfig {
    pub fn from_path(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("malformed config {}: {e}", path.display()))
    }

    pub fn validate(&self) -> Result<(), String> {
        self.model.validate().map_err(|e| e.to_string())?;
        self.sweep.validate()?;
        self.tolerances.validate().map_err(|e| e.to_string())?;
        if !(0.0..1.0).contains(&self.beta) {
            return Err(format!("beta must lie in [0, 1), got {}", self.beta));
        }
        if let Some(t) = self.time {
            if !(t > 0.0) || !t.is_finite() {
                return Err(format!("time must be positive, got {t}"));
            }
        }
        Ok(())
    }
}
