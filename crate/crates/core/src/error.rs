//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring context mismatch: left is {left}, right is {right}")]
    ContextMismatch { left: String, right: String },

    #[error("matrix is not square: {rows} rows but a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("series offsets {left} and {right} differ by a non-integer")]
    OffsetMismatch { left: String, right: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid motif: {0}")]
    InvalidMotif(String),

    #[error("invalid GZ scheme: {0}")]
    InvalidScheme(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}
