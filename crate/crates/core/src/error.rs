use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input (group files, permutations, tables, fixtures).
    #[error("parse error: {0}")]
    Parse(String),

    /// A configured size limit was exceeded.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// An operation was called outside its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal consistency check failed. This signals a bug or
    /// an out-of-scope input rather than a user error.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn size(msg: impl Into<String>) -> Self {
        Error::SizeLimit(msg.into())
    }

    pub fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
