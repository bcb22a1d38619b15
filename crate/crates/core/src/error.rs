//! Error type shared by the whole crate.

use std::fmt;

/// Errors produced by validation, preconditions, and internal checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input data (bad one-line notation, non-k-strict shape, ...).
    Validation(String),
    /// Input is well formed but violates an operation's precondition.
    Precondition(String),
    /// The requested case is outside what the theory covers.
    Unsupported(String),
    /// An internal consistency check failed; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Validation(m) => write!(f, "validation error: {m}"),
            Error::Precondition(m) => write!(f, "precondition error: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported case: {m}"),
            Error::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn unsupported(msg: impl Into<String>) -> Error {
    Error::Unsupported(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
