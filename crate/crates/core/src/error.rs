use thiserror::Error;

/// Errors produced by the numerical kernels and the model layers built on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("no convergence after {iterations} steps (error estimate {estimate:e})")]
    NonConvergence { iterations: usize, estimate: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("survival amplitude vanishes at t = {t} (|a| = {magnitude:e})")]
    AmplitudeVanishing { t: f64, magnitude: f64 },

    #[error("power-law series vanishes at t = {t}")]
    SeriesVanishing { t: f64 },

    #[error("ill-conditioned fit: {0}")]
    IllConditionedFit(String),

    #[error("no crossover: {0}")]
    NoCrossover(String),

    #[error("lines do not share a common threshold energy")]
    MismatchedEmin,

    #[error("degenerate denominator in double ratio")]
    DegenerateDenominator,
}

pub type Result<T> = std::result::Result<T, Error>;
