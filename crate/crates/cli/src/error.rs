use std::io;

use bipareto_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {source}")]
    Input { path: String, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("verdict FAIL: {0}")]
    Verdict(String),
}

impl CliError {
    pub(crate) fn parse(line: usize, msg: String) -> Self {
        CliError::Parse { line, msg }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Input { .. } => 2,
            CliError::Core(Error::Usage(_))
            | CliError::Core(Error::DimensionMismatch { .. })
            | CliError::Core(Error::Unsupported(_)) => 2,
            CliError::Core(Error::Capacity { .. }) => 3,
            CliError::Core(Error::Infeasible) | CliError::Core(Error::Unbounded) => 4,
            _ => 1,
        }
    }
}
