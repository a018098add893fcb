//! Command-line front end: `amplitude`, `hamiltonian`, `crossover` and
//! `redshift` subcommands writing CSV or JSON tables.
//!
//! Exit statuses: 0 on success, 2 for usage, configuration or validation
//! errors, 3 when a numerical evaluation fails.

mod commands;
pub mod config;
pub mod table;

use clap::{Args, Parser, Subcommand};
use config::{Format, RunConfig, Spacing};
use std::ffi::OsString;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "khalfin", version, about = "Long-time decay of a truncated Breit-Wigner resonance")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Survival amplitude a(t) and decay law |a(t)|² over a time sweep.
    Amplitude {
        #[command(flatten)]
        common: CommonArgs,
        /// Add quadrature-route columns next to the closed form.
        #[arg(long)]
        all_routes: bool,
    },
    /// Effective Hamiltonian h(t), energy and decay rate over a time sweep.
    Hamiltonian {
        #[command(flatten)]
        common: CommonArgs,
        /// Add finite-difference columns and fail if the routes disagree.
        #[arg(long)]
        fd_check: bool,
    },
    /// Crossover time from exponential to power-law decay.
    Crossover {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Asymptotic and Doppler-observed energies of a line catalog.
    Redshift {
        #[command(flatten)]
        common: CommonArgs,
        /// Evaluation time; defaults to fifty times the largest crossover time.
        #[arg(long)]
        time: Option<f64>,
    },
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// JSON run configuration; flags override its fields.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Ratio (E0 - Emin)/gamma0; sets e0 from emin and gamma0.
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    gamma0: Option<f64>,
    #[arg(long)]
    e0: Option<f64>,
    #[arg(long)]
    emin: Option<f64>,
    #[arg(long)]
    hbar: Option<f64>,
    #[arg(long)]
    t_start: Option<f64>,
    #[arg(long)]
    t_stop: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long)]
    log_spacing: bool,
    /// Source recession speed v/c.
    #[arg(long)]
    beta: Option<f64>,
    /// Line catalog CSV with header id,e0,gamma0[,e_min].
    #[arg(long, value_name = "PATH")]
    catalog: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl CommonArgs {
    fn resolve(&self) -> Result<RunConfig, String> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::from_path(path)?,
            None => RunConfig::default(),
        };
        if self.x.is_some() && self.e0.is_some() {
            return Err("--x and --e0 both set the resonance position; give one".into());
        }
        let m = &mut cfg.model;
        if let Some(v) = self.emin {
            m.e_min = v;
        }
        if let Some(v) = self.gamma0 {
            m.gamma0 = v;
        }
        if let Some(v) = self.hbar {
            m.hbar = v;
        }
        if let Some(v) = self.e0 {
            m.e0 = v;
        }
        if let Some(x) = self.x {
            m.e0 = m.e_min + x * m.gamma0;
        }
        if let Some(v) = self.t_start {
            cfg.sweep.t_start = v;
        }
        if let Some(v) = self.t_stop {
            cfg.sweep.t_stop = v;
        }
        if let Some(v) = self.points {
            cfg.sweep.points = v;
        }
        if self.log_spacing {
            cfg.sweep.spacing = Spacing::Log;
        }
        if let Some(v) = self.beta {
            cfg.beta = v;
        }
        if let Some(p) = &self.catalog {
            cfg.catalog_path = Some(p.clone());
        }
        if let Some(f) = self.format {
            cfg.outputs.format = f;
        }
        if let Some(p) = &self.out {
            cfg.outputs.path = Some(p.clone());
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
/// Returns the process exit status; never panics on bad input.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let outcome = match &cli.command {
        Command::Amplitude { common, all_routes } => {
            common.resolve().map(|c| commands::amplitude(&c, *all_routes))
        }
        Command::Hamiltonian { common, fd_check } => {
            common.resolve().map(|c| commands::hamiltonian(&c, *fd_check))
        }
        Command::Crossover { common } => common.resolve().map(|c| commands::crossover(&c)),
        Command::Redshift { common, time } => common.resolve().and_then(|mut c| {
            if time.is_some() {
                c.time = *time;
                c.validate()?;
            }
            Ok(commands::redshift(&c))
        }),
    };
    match outcome {
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_CONFIG
        }
        Ok(Ok(())) => EXIT_OK,
        Ok(Err(failure)) => {
            eprintln!("error: {}", failure.message());
            failure.status()
        }
    }
}
