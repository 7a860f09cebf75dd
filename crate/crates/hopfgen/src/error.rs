use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not convolution-invertible: {0}")]
    NotInvertible(String),
    #[error("no antipode: the convolution inverse of the identity does not exist ({0})")]
    AntipodeMissing(String),
    #[error("map does not descend to the presented ring: {0}")]
    WellDefinednessFailure(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("independent computation paths disagree: {0}")]
    Mismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
