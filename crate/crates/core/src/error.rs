use thiserror::Error;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible radicands sqrt({0}) and sqrt({1}) in one computation")]
    IncompatibleRadicand(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
    #[error("square root of a negative number")]
    NegativeSqrt,
    #[error("radicand too large to reduce to square-free form")]
    RadicandTooLarge,
    #[error("value out of domain: {0}")]
    Domain(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("relaxation violated: {0}")]
    RelaxationViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
