use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid wavelength grid: {0}")]
    InvalidGrid(String),

    #[error("spectrum integrates to zero")]
    ZeroSpectrum,

    #[error("missing file {}", .0.display())]
    MissingFile(PathBuf),

    #[error("{}:{line}: {message}", .path.display())]
    MalformedCsv { path: PathBuf, line: usize, message: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("medium has zero extinction at {0} nm")]
    VacuumMedium(f64),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid {entity}: {message}")]
    Validation { entity: String, message: String },

    #[error("unknown fluorophore `{0}`")]
    UnknownFluorophore(String),

    #[error("quadrature did not converge: relative change {0:.3e} after refinement")]
    NonConvergent(f64),

    #[error("no illuminated pixels")]
    NoIlluminatedPixels,

    #[error("malformed spectral dump: {0}")]
    MalformedDump(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),
}

impl Error {
    pub(crate) fn validation(entity: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation { entity: entity.into(), message: message.into() }
    }

    /// True for errors caused by the filesystem rather than by content.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io(_) | Error::MissingFile(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
