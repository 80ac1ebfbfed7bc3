use lcm_core::MonoidError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliError {
    /// Bad flags, unparsable words, values outside an instance's domain.
    #[error("{0}")]
    Usage(String),
    /// A checked property failed; the message carries a reproduction line.
    #[error("{0}")]
    Violation(String),
    /// A guarantee of the library did not hold.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Violation(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<MonoidError> for CliError {
    fn from(e: MonoidError) -> Self {
        match e {
            MonoidError::InternalInvariantViolation(_) => CliError::Internal(e.to_string()),
            MonoidError::SearchBoundExceeded { .. } => {
                CliError::Usage(format!("{e}; raise --bfs-bound or shorten the inputs"))
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("invalid JSON: {e}"))
    }
}
