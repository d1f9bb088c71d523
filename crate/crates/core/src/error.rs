//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error("denominator vanishes: {0}")]
    VanishingDenominator(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Cache(e.to_string())
    }
}
