use thiserror::Error;

/// Errors raised by the volume, ratio and sampling routines.
///
/// Every variant is a domain error: the inputs were well-formed but fall
/// outside the range where the requested quantity is defined or useful.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid {name}: {value} (expected {expected})")]
    InvalidArgument {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("{op} requires dimension in {min}..={max}, got {n}")]
    DimensionOutOfRange {
        op: &'static str,
        n: u64,
        min: u64,
        max: u64,
    },

    #[error("{op} requires at least {min} samples, got {got}")]
    TooFewSamples {
        op: &'static str,
        got: u64,
        min: u64,
    },

    #[error("convergence scan needs at least 3 distinct dimensions, got {0}")]
    TooFewDimensions(usize),

    #[error("volume underflows f64 (ln V = {0})")]
    Underflow(f64),

    #[error("volume overflows f64 (ln V = {0})")]
    Overflow(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
