use thiserror::Error;

/// Failure of a run, split by the exit code it maps to.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 1.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// Output could not be written; exit code 1.
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
    /// Well-formed input that violates an operation's precondition; exit code 2.
    #[error("precondition violated: {0}")]
    Precondition(#[from] qubit_indirect::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io { .. } => 1,
            CliError::Precondition(_) => 2,
        }
    }

    pub(crate) fn config(e: impl std::fmt::Display) -> Self {
        CliError::Config(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
