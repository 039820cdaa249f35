//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("shift alphabet too short: need {needed} entries, got {got}")]
    AlphabetTooShort { needed: usize, got: usize },

    #[error("variable family '{family}' not allowed here: {context}")]
    ForbiddenFamily { family: char, context: &'static str },

    #[error("wrong ideal kind: expected {expected}, got {got}")]
    WrongKind { expected: &'static str, got: &'static str },

    #[error("invalid generator tag: {0}")]
    InvalidTag(String),

    #[error("n = {n} exceeds the soft limit {limit} for {op}; raise the limit to override")]
    SoftLimit {
        n: usize,
        limit: usize,
        op: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
