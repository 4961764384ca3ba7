use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("level {0} outside supported range 1..=8")]
    LevelOutOfRange(u32),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("singular input: {0}")]
    Singular(&'static str),
    #[error("logarithm branch undefined for negative real input")]
    Branch,
    #[error("index {index} out of range for level {level}")]
    IndexOutOfRange { index: usize, level: u8 },
    #[error("tolerance {tol:e} not reached (best estimate error {err:e})")]
    Accuracy { best: Vec<f64>, err: f64, tol: f64 },
    #[error("divergent integral: {0}")]
    Divergence(String),
    #[error("outside convergence domain: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ill-conditioned: {0}")]
    Conditioning(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
