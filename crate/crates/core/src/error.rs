//! Crate-wide error type.
//!
//! Every error carries a short machine-parsable code (`Error::code`) that the
//! CLI prefixes onto its single-line error output.

use std::path::PathBuf;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid PGM file {path}: {reason}")]
    PgmFormat { path: PathBuf, reason: String },

    #[error("dimension mismatch in {file}: expected {expected_w}x{expected_h}, got {got_w}x{got_h}")]
    DimensionMismatch {
        file: PathBuf,
        expected_w: usize,
        expected_h: usize,
        got_w: usize,
        got_h: usize,
    },

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("CSV error in {path} line {line}: {reason}")]
    Csv {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("invalid model file {path}: {reason}")]
    ModelFormat { path: PathBuf, reason: String },

    #[error("manifest error in {path}: {reason}")]
    Manifest { path: PathBuf, reason: String },

    #[error("prediction/label join failed: {0}")]
    Join(String),

    #[error("missing upstream artifact {path}: {hint}")]
    MissingArtifact { path: PathBuf, hint: String },

    #[error("json error on {path}: {reason}")]
    Json { path: PathBuf, reason: String },
}

impl Error {
    /// Stable short code for machine-readable CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Io { .. } => "E_IO",
            Error::PgmFormat { .. } => "E_PGM",
            Error::DimensionMismatch { .. } => "E_DIM",
            Error::Geometry(_) => "E_GEOM",
            Error::Contract(_) => "E_CONTRACT",
            Error::EmptyInput(_) => "E_EMPTY",
            Error::ShapeMismatch(_) => "E_SHAPE",
            Error::Config(_) => "E_CONFIG",
            Error::Csv { .. } => "E_CSV",
            Error::ModelFormat { .. } => "E_MODEL",
            Error::Manifest { .. } => "E_MANIFEST",
            Error::Join(_) => "E_JOIN",
            Error::MissingArtifact { .. } => "E_ARTIFACT",
            Error::Json { .. } => "E_JSON",
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
