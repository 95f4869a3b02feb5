use thiserror::Error;

/// Errors raised by the algebra, the ring contexts and the front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input rejected: {0}")]
    ZeroInput(&'static str),
    #[error("square norm must be 1, got {0}")]
    NormNotOne(String),
    #[error("norm {0} exceeds the trial-division range")]
    NormTooLarge(String),
    #[error("input does not split over Q(i); residual factor {residual}")]
    Unsplittable { residual: String },
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("context mismatch: {0} vs {1}")]
    ContextMismatch(String, String),
    #[error("unsupported in this context: {0}")]
    Unsupported(String),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
