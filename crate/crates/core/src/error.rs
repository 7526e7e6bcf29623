use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A table or literal could not be read.
    #[error("parse error in `{key}`: {message}")]
    Parse { key: String, message: String },

    /// A table is not well-formed (ragged, indices out of range).
    #[error("malformed table: {0}")]
    Structure(String),

    /// An operation was called on inputs outside its domain.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An enumeration or search exceeded its configured bound.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn parse(key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            key: key.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
