use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("unknown point label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),

    #[error("carrier must contain at least one point")]
    EmptyCarrier,

    #[error("size cap exceeded: {what} has {size}, limit is {limit}")]
    SizeCap {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("power of an entourage requires n >= 1")]
    ZeroPower,

    #[error("boundedness of the empty set is not defined")]
    EmptyBoundedSet,

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
