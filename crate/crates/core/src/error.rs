use thiserror::Error;

use crate::seqcore::ClassKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("sequence length {n} is outside the supported range [2, {max}]")]
    InvalidLength { n: usize, max: usize },

    #[error("class {kind} requires {needs} n, got n = {n}")]
    Parity {
        kind: ClassKind,
        n: usize,
        needs: &'static str,
    },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("free-coefficient index {index} is out of range for a class with {free_count} free coefficients")]
    IndexOutOfRange { index: u64, free_count: usize },

    #[error("invalid enumeration range [{lo}, {hi}) for a class of size {size}")]
    InvalidRange { lo: u64, hi: u64, size: u64 },

    #[error("guardrail exceeded: {what} is {got}, limit is {limit}")]
    Guardrail {
        what: &'static str,
        got: u64,
        limit: u64,
    },

    #[error("identity id must be in 1..=10, got {0}")]
    UnknownIdentity(u8),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic overflow in exact rational {0}")]
    Overflow(&'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
