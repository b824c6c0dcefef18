use thiserror::Error;

/// Errors raised by the library.
///
/// `Invariant` marks a mathematical self-check that failed (an enumeration
/// disagreeing with its closed form, an expansion that did not close). Every
/// other variant is a usage error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index must be nonnegative, got {0}")]
    NegativeIndex(i64),
    #[error("{0} must be nonzero")]
    ZeroArgument(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_invariant(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
