use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("factorization budget exhausted on {0}")]
    Unfactored(String),
    #[error("point not on curve: {0}")]
    OffCurve(String),
    #[error("not a square: {0}")]
    NotSquare(String),
    #[error("division by zero")]
    DivByZero,
}

pub type Result<T> = std::result::Result<T, Error>;
