use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("grading error: {0}")]
    Grading(String),
    #[error("ring mismatch: {0}")]
    Ring(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("resolution too short: needed length {needed}, computed {available}")]
    Bound { needed: usize, available: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("module of depth 0 has no regular element: {0}")]
    DepthZeroWitness(String),
    #[error("regular element search exhausted after {trials} candidates")]
    SearchExhausted { trials: usize },
    #[error("random module generation failed: {0}")]
    Generation(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown name: {0}")]
    Name(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
