use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", .path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{}: malformed algebra file: {source}", .path.display())]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error(transparent)]
    Algebra(#[from] nilschur::Error),

    /// A proved inequality or identity failed on valid input.
    #[error("violation: {0}")]
    Violation(String),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Json { .. } => EXIT_INPUT,
            CliError::Algebra(e) if e.is_internal() => EXIT_INTERNAL,
            CliError::Algebra(_) => EXIT_INPUT,
            CliError::Violation(_) => EXIT_INTERNAL,
        }
    }
}
