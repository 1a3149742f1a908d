use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("rotation index {index} out of range for word of length {len}")]
    RotationOutOfRange { index: usize, len: usize },

    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,

    #[error("needle must be a nonempty word")]
    EmptyNeedle,

    #[error("piece analysis needs at least two distinct relators, got {0}")]
    TooFewRelators(usize),

    #[error("lambda must satisfy 0 < lambda < 1, got {0}/{1}")]
    LambdaOutOfRange(u64, u64),

    #[error("the semigroup has no identity; empty expression")]
    EmptySemigroupWord,

    #[error("presentation: {0}")]
    Presentation(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
