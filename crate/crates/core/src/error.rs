use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed graph, decomposition or design input.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A decomposition or design failed validation.
    #[error("validation failed: {0}")]
    Validation(String),
    /// A brute-force request exceeds the configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
