use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("not a delta-matroid: {0}")]
    NotADeltaMatroid(String),
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("invalid combination: {0}")]
    InvalidCombination(String),
    #[error("resource limit: {what} needs n = {n}, limit is {limit} (set DELTOID_MAX_N to override)")]
    ResourceLimit { what: &'static str, n: usize, limit: usize },
    #[error("internal error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
