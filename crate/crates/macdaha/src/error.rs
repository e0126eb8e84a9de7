use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("exponent error: {0}")]
    Exponent(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("evaluation pole: {0}")]
    Pole(String),
    #[error("unlucky specialization: {0}")]
    Specialization(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
