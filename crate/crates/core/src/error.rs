//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the simulator library.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller violated an operation contract (dimension mismatch, empty
    /// input, parameter out of range, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Cosine similarity is undefined for a zero vector.
    #[error("cosine similarity requires non-zero vectors")]
    ZeroVector,

    /// A bitstream could not be decoded.
    #[error("decode error: {0}")]
    Decode(String),

    /// Encryption/decryption failure (key mismatch, plaintext overflow, ...).
    #[error("crypto error: {0}")]
    Crypto(String),

    /// Ledger rule violation.
    #[error("ledger error: {0}")]
    Ledger(String),

    /// Configuration file could not be parsed or failed validation.
    #[error("config error: {0}")]
    Config(String),

    /// Filesystem failure, annotated with the offending path.
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
