use std::path::PathBuf;

use discrete_teissier::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: cannot parse '{token}' as a number")]
    Parse { path: String, line: usize, token: String },

    #[error("{path}:{line}: negative value {value}")]
    NegativeValue { path: String, line: usize, value: f64 },

    #[error("{path}:{line}: {value} is not a non-negative integer (use --scale-floor to discretize)")]
    NotInteger { path: String, line: usize, value: f64 },

    #[error("{path}: no observations")]
    Empty { path: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error("{0} did not converge")]
    NotConverged(String),

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. }
            | CliError::NegativeValue { .. }
            | CliError::NotInteger { .. }
            | CliError::Empty { .. } => 2,
            CliError::NotConverged(_)
            | CliError::Core(
                CoreError::NonConvergence { .. }
                | CoreError::NoConvergence { .. }
                | CoreError::NoBracket { .. }
                | CoreError::InvalidBracket { .. },
            ) => 3,
            CliError::Core(CoreError::DegenerateData(_)) => 4,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
