use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a module character: {0}")]
    NotModuleCharacter(String),
    #[error("oracle refused: {0}")]
    Refused(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGroup(_) => "invalid-group",
            Error::InvalidWeight(_) => "invalid-weight",
            Error::NotDominant(_) => "not-dominant",
            Error::GroupMismatch(_) => "group-mismatch",
            Error::Parse(_) => "parse",
            Error::NotModuleCharacter(_) => "not-module-character",
            Error::Refused(_) => "refused",
            Error::Internal(_) => "internal",
            Error::Unsupported(_) => "unsupported",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
