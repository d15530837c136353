use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("method {method} is not available for {sequence}")]
    UnsupportedMethod {
        sequence: &'static str,
        method: &'static str,
    },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("budget exceeded: {what} (limit {limit})")]
    Budget { what: String, limit: u64 },

    /// A proven identity failed to hold. Always an implementation bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn budget(what: impl Into<String>, limit: u64) -> Self {
        Error::Budget {
            what: what.into(),
            limit,
        }
    }
}
