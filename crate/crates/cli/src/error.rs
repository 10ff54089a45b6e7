use std::path::PathBuf;

use thiserror::Error;

/// CLI failures, partitioned by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: u64,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Validation(skewgini::Error),

    #[error("invalid experiment: {0}")]
    Experiment(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Input(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Experiment(_) => 4,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<skewgini::Error> for CliError {
    fn from(e: skewgini::Error) -> Self {
        match e {
            skewgini::Error::BadParams(msg) => CliError::Experiment(msg),
            other => CliError::Validation(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
