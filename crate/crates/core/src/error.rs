use thiserror::Error;

/// A malformed literal, with the byte offset where parsing failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} at offset {offset}: {message}")]
pub struct ParseError {
    pub input: String,
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(input: &str, offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            input: input.to_string(),
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("character has {found} entries but the multipartition has {expected} components")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: String, right: String },

    #[error("character {chi} is not generic for n = {n}")]
    NonGeneric { chi: String, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {needed} evaluations requested, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("clamp {clamp} is below the minimum {minimum}")]
    ClampTooSmall { clamp: i64, minimum: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
