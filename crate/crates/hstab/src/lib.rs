//! File formats, reports, the acceptance suite and the `hstab` command line
//! on top of `hstab-core`.

pub mod cli;
pub mod format;
pub mod report;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] hstab_core::Error),
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: std::io::Error },
    #[error("verification failed")]
    Verification,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Core(_) => "computation",
            CliError::Output { .. } => "output",
            CliError::Verification => "verification",
        }
    }
}
