use super::config::{Format, RunConfig};
use super::table::{Cell, Table};
use super::{EXIT_CONFIG, EXIT_NUMERICAL};
use crate::crossover::{paper_approx_in_range, solve_crossover, PAPER_APPROX_MIN_RATIO};
use crate::density::NormalizedDensity;
use crate::effham::{effective_hamiltonian, effective_hamiltonian_fd};
use crate::error::Error;
use crate::redshift::{observed_line_table, DopplerFrame, LineCatalog};
use crate::survival::{amplitude_asymptotic, amplitude_closed_form, amplitude_quadrature, asymptotic_threshold};
use serde_json::{Map, Value};
use std::fs::File;
use std::io::{self, BufWriter, Write};

/// Relative tolerance of the in-run finite-difference check.
pub const FD_CHECK_TOLERANCE: f64 = 1e-6;

pub enum Failure {
    Config(String),
    Numerical(String),
}

impl Failure {
    pub fn message(&self) -> &str {
        match self {
            Failure::Config(m) | Failure::Numerical(m) => m,
        }
    }

    pub fn status(&self) -> i32 {
        match self {
            Failure::Config(_) => EXIT_CONFIG,
            Failure::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numerical(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn density(cfg: &RunConfig) -> Result<NormalizedDensity, Failure> {
    NormalizedDensity::new(cfg.model).map_err(|e| Failure::Config(e.to_string()))
}

fn emit(cfg: &RunConfig, command: &str, table: &Table, extra: Map<String, Value>) -> Outcome {
    let mut out: Box<dyn Write> = match &cfg.outputs.path {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            Failure::Config(format!("cannot write {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let written = match cfg.outputs.format {
        Format::Csv => table.write_csv(&mut out),
        Format::Json => {
            let mut meta = Map::new();
            meta.insert("command".into(), command.into());
            meta.insert("version".into(), env!("CARGO_PKG_VERSION").into());
            meta.insert(
                "config".into(),
                serde_json::to_value(cfg).map_err(|e| Failure::Config(e.to_string()))?,
            );
            meta.extend(extra);
            table.write_json(Value::Object(meta), &mut out)
        }
    };
    match written.and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        // A closed downstream pipe (e.g. `| head`) is not a failure of the run.
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(Failure::Config(format!("write failed: {e}"))),
    }
}

fn float_json(v: f64) -> Value {
    Cell::Float(v).to_json()
}

pub fn amplitude(cfg: &RunConfig, all_routes: bool) -> Outcome {
    let d = density(cfg)?;
    let threshold = asymptotic_threshold(&d)?;
    let mut columns = vec![
        "t", "re_a", "im_a", "abs_a", "p_t", "route", "est_error", "re_a_asym", "im_a_asym", "asym_est_error",
    ];
    if all_routes {
        columns.extend(["re_a_quad", "im_a_quad", "quad_est_error"]);
    }
    let mut table = Table::new(&columns);
    for t in cfg.sweep.times() {
        let a = amplitude_closed_form(&d, t)?;
        let mut row: Vec<Cell> = vec![
            t.into(),
            a.value.re.into(),
            a.value.im.into(),
            a.value.norm().into(),
            a.probability().into(),
            a.route.to_string().into(),
            a.est_error.into(),
        ];
        if t > threshold {
            let s = amplitude_asymptotic(&d, t, 2)?;
            row.extend([s.value.re.into(), s.value.im.into(), s.est_error.into()]);
        } else {
            row.extend([Cell::Empty, Cell::Empty, Cell::Empty]);
        }
        if all_routes {
            let q = amplitude_quadrature(&d, t, &cfg.tolerances)?;
            row.extend([q.value.re.into(), q.value.im.into(), q.est_error.into()]);
        }
        table.push(row);
    }
    let mut extra = Map::new();
    extra.insert("asymptotic_threshold".into(), float_json(threshold));
    emit(cfg, "amplitude", &table, extra)
}

pub fn hamiltonian(cfg: &RunConfig, fd_check: bool) -> Outcome {
    let d = density(cfg)?;
    if cfg.sweep.t_start <= 0.0 {
        return Err(Failure::Config("the effective Hamiltonian needs t_start > 0".into()));
    }
    let mut columns = vec!["t", "re_h", "im_h", "energy", "rate", "route", "conditioning_flag"];
    if fd_check {
        columns.extend(["re_h_fd", "im_h_fd", "fd_rel_diff"]);
    }
    let mut table = Table::new(&columns);
    let mut worst: Option<(f64, f64)> = None;
    for t in cfg.sweep.times() {
        let h = effective_hamiltonian(&d, t)?;
        let mut row: Vec<Cell> = vec![
            t.into(),
            h.h.re.into(),
            h.h.im.into(),
            h.energy.into(),
            h.rate.into(),
            h.route.to_string().into(),
            h.ill_conditioned.into(),
        ];
        if fd_check {
            let f = effective_hamiltonian_fd(&d, t)?;
            let rel = (f.h - h.h).norm() / h.h.norm();
            if !h.ill_conditioned && rel > FD_CHECK_TOLERANCE && worst.map_or(true, |(_, w)| rel > w) {
                worst = Some((t, rel));
            }
            row.extend([f.h.re.into(), f.h.im.into(), rel.into()]);
        }
        table.push(row);
    }
    emit(cfg, "hamiltonian", &table, Map::new())?;
    match worst {
        Some((t, rel)) => Err(Failure::Numerical(format!(
            "finite-difference check failed: relative difference {rel:e} at t = {t}"
        ))),
        None => Ok(()),
    }
}

pub fn crossover(cfg: &RunConfig) -> Outcome {
    let d = density(cfg)?;
    let x = d.params().ratio();
    let r = solve_crossover(&d)?;
    if !paper_approx_in_range(&d) {
        eprintln!(
            "warning: the approximate crossover formula is quoted for x > {PAPER_APPROX_MIN_RATIO}; x = {x}"
        );
    }
    if r.s_paper_approx.is_none() {
        eprintln!("warning: the approximate crossover formula is undefined at x = {x}");
    }
    let tau = d.params().lifetime();
    let mut table = Table::new(&[
        "x",
        "a_coefficient",
        "s_exact_small",
        "s_exact_large",
        "t_as",
        "s_paper_approx",
        "t_as_paper_approx",
        "approx_discrepancy",
        "residual",
        "relative_residual",
        "method",
        "paper_approx_in_range",
    ]);
    let method = serde_json::to_value(r.method)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    table.push(vec![
        x.into(),
        r.a_coefficient.into(),
        r.s_exact_small.into(),
        r.s_exact_large.into(),
        r.t_as(d.params()).into(),
        r.s_paper_approx.into(),
        r.s_paper_approx.map(|s| s * tau).into(),
        r.approx_discrepancy().into(),
        r.residual.into(),
        r.relative_residual().into(),
        method.into(),
        paper_approx_in_range(&d).into(),
    ]);
    emit(cfg, "crossover", &table, Map::new())
}

pub fn redshift(cfg: &RunConfig) -> Outcome {
    let path = cfg
        .catalog_path
        .as_ref()
        .ok_or_else(|| Failure::Config("redshift needs a line catalog (--catalog PATH)".into()))?;
    let catalog = LineCatalog::from_csv_path(path, cfg.model.hbar, cfg.model.e_min)
        .map_err(|e| Failure::Config(e.to_string()))?;
    let frame = DopplerFrame::new(cfg.beta).map_err(|e| Failure::Config(e.to_string()))?;
    let max_t_as = catalog.max_crossover_time()?;
    let t = cfg.time.unwrap_or(50.0 * max_t_as);
    if t <= max_t_as {
        eprintln!("warning: t = {t} does not exceed the largest crossover time {max_t_as}");
    }
    let observed = observed_line_table(&catalog, &frame, t)?;
    let mut table = Table::new(&["id", "e0", "e_inf", "e0_obs", "e_inf_obs", "delta_pair_check"]);
    for row in &observed.rows {
        table.push(vec![
            row.id.as_str().into(),
            row.e0.into(),
            row.e_inf.into(),
            row.e0_obs.into(),
            row.e_inf_obs.into(),
            row.delta_pair_check.into(),
        ]);
    }
    let mut extra = Map::new();
    extra.insert("t".into(), float_json(t));
    extra.insert("kappa".into(), float_json(observed.kappa));
    extra.insert("max_crossover_time".into(), float_json(max_t_as));
    emit(cfg, "redshift", &table, extra)
}
