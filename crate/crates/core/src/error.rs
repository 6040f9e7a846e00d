use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("expected {expected} variables, found {found}")]
    VariableCount { expected: usize, found: usize },
    #[error("parse error at {line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("objects live over different rings")]
    RingMismatch,
    #[error("homological index {index} is outside the computed window {window}")]
    OutOfWindow { index: usize, window: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
