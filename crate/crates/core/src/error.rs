use alloc::string::String;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("singular system: {0}")]
    Singular(String),

    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),

    #[error("empty vocabulary")]
    EmptyVocabulary,

    #[error("undefined equal-mass fraction: {0}")]
    UndefinedFraction(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
