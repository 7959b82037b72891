use thiserror::Error;

/// Failures mapped onto the exit-code contract.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_REPRODUCED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => EXIT_USAGE,
            CliError::Cap(_) => EXIT_CAP,
        }
    }
}

impl From<cliquelab_core::Error> for CliError {
    fn from(e: cliquelab_core::Error) -> Self {
        match e {
            cliquelab_core::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}
