use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("level {r} does not divide level {m}")]
    LevelIncompatible { r: u32, m: u32 },
    #[error("q = {0} is even; the symplectic decomposition is only established for odd q")]
    EvenQ(u64),
    #[error("group order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: u128, bound: u128 },
    #[error("unsupported size: {0}")]
    Unsupported(String),
    #[error("inexact division: {0}")]
    Inexact(String),
}

pub type Result<T> = std::result::Result<T, Error>;
