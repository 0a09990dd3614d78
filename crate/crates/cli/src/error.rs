use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Core(#[from] ncomp::Error),

    /// A check on computed output failed; files describing the failure
    /// have been written.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 2 for bad input or unmet preconditions, 3 when a residual or
    /// containment check fails.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 3,
            CliError::Core(e) if e.is_verification() => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
