use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Contract(String),

    #[error(transparent)]
    Core(#[from] commlab::Error),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Contract(_) | CliError::Core(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Validation(_) => 3,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub(crate) fn contract<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Contract(msg.into()))
}
