use thiserror::Error;

/// Errors raised by the operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid base {0}: a base must not be -1, 0 or 1")]
    InvalidBase(i64),

    #[error("{value} is not representable in base {base}")]
    NotRepresentable { base: i64, value: String },

    #[error("digit {digit} is not in the digit set of base {base}")]
    InvalidDigit { base: i64, digit: u64 },

    #[error("invalid digit length {0}: lengths start at 1")]
    InvalidLength(u64),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no witness with lengths ({n}, {m}) and offset {e} in base {base}")]
    WitnessNotFound { base: i64, n: u32, m: u32, e: i64 },

    #[error("the monoid has gcd {gcd}, so its complement in N is infinite")]
    InfiniteComplement { gcd: u64 },

    #[error("{0} is not an element of the monoid")]
    NotMember(u64),

    #[error("the monoid is all of N")]
    IsAllOfN,

    #[error("overflow: no fixed point within {bound} iterations")]
    Overflow { bound: usize },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("cap {cap} is too small for the completion (needs more than {needed})")]
    CapTooSmall { cap: u64, needed: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
