//! Batch front end: JSON job configs in, JSON/CSV/Markdown reports out.

pub mod commands;
pub mod config;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] wkl_core::Error),
    #[error("io error: {0}")]
    Io(String),
}

impl CliError {
    /// Process exit code: 2 for bad input, 4 for numeric instability.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Core(wkl_core::Error::Unstable(_)) => 4,
            CliError::Core(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}
