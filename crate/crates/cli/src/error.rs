use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input, bad parameters, I/O failures.
    #[error("{0}")]
    Input(String),
    /// The square did not meet the requested classification.
    #[error("{0}")]
    VerificationFailed(String),
    /// The generator ran out of candidates.
    #[error("{0}")]
    Exhausted(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerificationFailed(_) => 1,
            CliError::Input(_) => 2,
            CliError::Exhausted(_) => 3,
        }
    }
}

impl From<franklin_core::Error> for CliError {
    fn from(e: franklin_core::Error) -> Self {
        match e {
            franklin_core::Error::NotFound { .. } => CliError::Exhausted(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(format!("I/O error: {e}"))
    }
}
