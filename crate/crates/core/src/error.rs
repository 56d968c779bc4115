use thiserror::Error;

use crate::basis::BasisTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("basis mismatch: expected {expected:?}, found {found:?}")]
    BasisMismatch { expected: BasisTag, found: BasisTag },

    #[error("unknown basis tag `{0}`")]
    UnknownBasis(String),

    #[error("magnetic angle undefined: numerator and denominator both vanish")]
    DegenerateAngle,

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("invalid tau grid: {0}")]
    InvalidGrid(String),

    #[error("invalid measurement set: {0}")]
    InvalidMeasurement(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("numerical invariant violated: {0}")]
    Invariant(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}
