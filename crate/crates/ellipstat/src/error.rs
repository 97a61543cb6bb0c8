//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped by failure class so callers (and the CLI exit-code
/// mapping) can distinguish configuration problems from numerical ones.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid distribution spec, config file, or parameter combination.
    #[error("configuration error: {0}")]
    Config(String),

    /// A point was passed where the evaluated function is not defined
    /// (e.g. inside the spectral support).
    #[error("domain error: {0}")]
    Domain(String),

    /// Contour placement problem (intersects or fails to enclose the
    /// required region).
    #[error("geometry error: {0}")]
    Geometry(String),

    /// A quadrature failed its node-doubling convergence check.
    #[error("quadrature error: {0}")]
    Quadrature(String),

    /// A truncated series failed its tail-decay check.
    #[error("truncation error: {0}")]
    Truncation(String),

    /// Truncation removed essentially all variance.
    #[error("degenerate truncation: {0}")]
    DegenerateTruncation(String),

    /// Data passed to an estimator is degenerate (e.g. zero variance).
    #[error("degenerate data: {0}")]
    DegenerateData(String),

    /// Object is in the wrong state for the requested operation
    /// (e.g. normalizing an already-normalized matrix).
    #[error("state error: {0}")]
    State(String),

    /// A numerical routine failed (non-convergence, ill-conditioning).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Resource limit exceeded (e.g. matrix dimension cap).
    #[error("resource error: {0}")]
    Resource(String),

    /// I/O failure, annotated with the path involved.
    #[error("io error at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
