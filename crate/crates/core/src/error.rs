//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported operation: {0}")]
    UnsupportedOperation(String),

    #[error("degenerate bandwidth: {0}")]
    DegenerateBandwidth(String),

    #[error("grid coverage error: {missing} missing, {extra} extra points (first offenders: {detail})")]
    Coverage {
        missing: usize,
        extra: usize,
        detail: String,
    },

    #[error("point outside domain: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("model diverged (non-finite state) at t = {time}")]
    ModelDivergence { time: f64 },

    #[error("model evaluation diverged for {} sample(s); first indices: {:?}", .indices.len(), truncated(.indices))]
    DivergentSamples { indices: Vec<usize> },

    #[error("incompatible estimates: {0}")]
    IncompatibleEstimates(String),

    #[error(
        "predictability violation at q = {q}: observed density {observed} but push-forward estimate {pushforward} is below floor"
    )]
    PredictabilityViolation {
        q: f64,
        observed: f64,
        pushforward: f64,
    },

    #[error("empty posterior: all ratio values are zero")]
    EmptyPosterior,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

fn truncated(indices: &[usize]) -> Vec<usize> {
    indices.iter().copied().take(8).collect()
}
