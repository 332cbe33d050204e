use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension k={0} outside supported range 1..={1}")]
    InvalidDimension(u32, u32),

    #[error("step class must flip at least one coordinate")]
    InvalidStep,

    #[error("incompatible operands: dimension {left} vs dimension {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("vertex word {bits:#x} has bits set at or above position {k}")]
    BitsOutOfRange { bits: u64, k: u32 },

    #[error("cannot flip {m} coordinates of a {k}-dimensional vertex")]
    FlipRange { m: u32, k: u32 },

    #[error("dimension k={k} exceeds the capacity limit {max} ({reason})")]
    Capacity {
        k: u32,
        max: u32,
        reason: &'static str,
    },

    #[error("capacity limit {0} exceeds the hard ceiling {1}")]
    LimitTooLarge(u32, u32),

    #[error("h={0} is even: no base cycle exists for an even step")]
    EvenStep(u64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid leaper ({a},{b}): {reason}")]
    InvalidLeaper {
        a: u32,
        b: u32,
        reason: &'static str,
    },

    #[error("unknown leaper {name:?}; known leapers: {catalog}")]
    UnknownLeaper { name: String, catalog: String },

    #[error("internal error: {0}")]
    Internal(String),
}
