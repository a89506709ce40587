use thiserror::Error;

/// Crate-wide error type. Messages are stable: callers (and tests) match on
/// the leading phrase, so keep them short and specific.
#[derive(Debug, Error)]
pub enum Error {
    /// Bad input or parameters outside a documented precondition.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// An iterative solver failed to converge or left its regime of validity.
    #[error("solver failure: {0}")]
    Solver(String),
    /// A constructed object failed its own validity check.
    #[error("verification failure: {0}")]
    Verification(String),
    /// An internal invariant was violated; this is a bug, not a user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
    pub fn solver(msg: impl Into<String>) -> Self {
        Error::Solver(msg.into())
    }
    pub fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
