use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The caller violated an operation's precondition or passed bad parameters.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An exact search was asked to run on an instance above its configured size limit.
    #[error("{what}: instance size {size} exceeds budget {limit}")]
    Budget {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// A randomized procedure ran out of attempts.
    #[error("{what}: gave up after {attempts} attempts ({detail})")]
    Exhausted {
        what: &'static str,
        attempts: usize,
        detail: String,
    },

    /// A guarantee that should hold by construction did not. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
