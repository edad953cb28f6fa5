use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value does not fit in a double")]
    FloatOverflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange { what: &'static str, value: usize, allowed: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("sampling failed after {attempts} degenerate draws: {reason}")]
    Degenerate { attempts: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
