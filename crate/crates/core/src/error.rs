use thiserror::Error;

/// Errors shared across the whole pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor shapes are incompatible for the attempted operation.
    #[error("dimension mismatch: {0}")]
    Dim(String),

    /// A caller violated an operation contract (non-scalar loss, zero masked
    /// positions, permuted fact order, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// A malformed input file.
    #[error("parse error at {path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    /// Invalid or inconsistent configuration.
    #[error("config error: {0}")]
    Config(String),

    /// Bad dataset content (unknown label, empty split, ...).
    #[error("data error: {0}")]
    Data(String),

    /// A corrupt or incompatible checkpoint file.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
