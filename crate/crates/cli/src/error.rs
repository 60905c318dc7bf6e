use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Exit codes: 0 success, 1 usage, 2 I/O, 3 computation.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {message}")]
    Codec { path: PathBuf, message: String },
    #[error(transparent)]
    Compute(warmgray_core::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io { .. } | CliError::Codec { .. } | CliError::Csv(_) => 2,
            CliError::Compute(_) => 3,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<warmgray_core::Error> for CliError {
    /// Parameter validation failures are usage errors; everything else is a
    /// computation error.
    fn from(e: warmgray_core::Error) -> Self {
        use warmgray_core::Error as E;
        match e {
            E::InvalidBetaR(_)
            | E::InvalidBetaK(_)
            | E::InvalidTau(_)
            | E::InvalidPairCount
            | E::InvalidSlope(_)
            | E::InvalidMidpoint(_)
            | E::InvalidBins(_)
            | E::InvalidStrength(_)
            | E::InvalidTile(..) => CliError::Usage(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
