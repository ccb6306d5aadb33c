use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    Zero,

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid graph spec: {0}")]
    InvalidSpec(String),

    #[error("malformed spec string {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("n = {n} exceeds the size limit {limit} for {what}")]
    TooLarge {
        what: &'static str,
        n: u64,
        limit: u64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("enumeration of {required} divisor sets for n = {n} exceeds the budget of {budget}")]
    BudgetExceeded { n: u64, required: u64, budget: u64 },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
