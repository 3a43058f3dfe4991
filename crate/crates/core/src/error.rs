use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// The CLI maps `Verification` to exit code 2 and every other variant to 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("singular evaluation: {0}")]
    Singular(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("series expansion error: {0}")]
    Expansion(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! domain {
    ($($t:tt)*) => { $crate::error::Error::Domain(format!($($t)*)) };
}
macro_rules! precondition {
    ($($t:tt)*) => { $crate::error::Error::Precondition(format!($($t)*)) };
}
pub(crate) use domain;
pub(crate) use precondition;
