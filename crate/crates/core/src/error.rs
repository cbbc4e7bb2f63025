use thiserror::Error;

/// Errors reported by the counting primitives.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("{what} = {value} exceeds the configured cap of {cap}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
