use std::path::PathBuf;

use diminish_core::Error as CoreError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const CAP: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    InFile {
        path: PathBuf,
        #[source]
        source: CoreError,
    },
    #[error("{0}")]
    Usage(String),
    #[error("writing report: {0}")]
    Output(#[source] std::io::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn core(&self) -> Option<&CoreError> {
        match self {
            CliError::Core(e) | CliError::InFile { source: e, .. } => Some(e),
            _ => None,
        }
    }

    /// Cap refusals exit with 3, broken diminisher contracts with 1 and
    /// everything else with 2.
    pub fn exit_code(&self) -> i32 {
        match self.core() {
            Some(e) if e.is_cap() => exit::CAP,
            Some(CoreError::Contract { .. }) => exit::VERIFICATION_FAILED,
            _ => exit::INPUT,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
