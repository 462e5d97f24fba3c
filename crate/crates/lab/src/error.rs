use std::path::PathBuf;

/// Errors surfaced by the IO layer, sweeps and CLI.
#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{0}")]
    Validation(String),

    #[error(transparent)]
    Core(#[from] spurious_core::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, LabError>;

impl LabError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        LabError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 2 for I/O failures, 1 for everything the user
    /// can fix by changing inputs or flags.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Io { .. } => 2,
            LabError::Csv(e) if e.is_io_error() => 2,
            _ => 1,
        }
    }
}
