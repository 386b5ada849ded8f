use num_bigint::BigInt;
use num_rational::BigRational;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cell ({n},{k}) is outside the triangle (nmax = {nmax})")]
    OutOfRange { n: u32, k: u32, nmax: u32 },

    #[error("{family} enumeration supports n <= {bound}, got n = {n}")]
    BoundExceeded {
        family: &'static str,
        bound: u32,
        n: u32,
    },

    #[error("cell ({n},{k}): coefficient of degree {index} is {value}, expected positive")]
    SignCheck {
        n: u32,
        k: u32,
        index: usize,
        value: BigInt,
    },

    #[error("interpolation produced non-integer coefficient {value} at degree {index}")]
    NonIntegerCoefficient { index: usize, value: BigRational },

    #[error("series composition requires an inner series with zero constant term in x")]
    NonzeroConstantTerm,

    #[error("quasi-permutation is not subdiagonal: cell ({x},{y}) lies on or above the diagonal")]
    NotSubdiagonal { x: u32, y: u32 },

    #[error("not a partial permutation: repeated row or column in {0}")]
    NotPartialPermutation(String),

    #[error("records of an empty word are undefined")]
    EmptyWord,

    #[error("invalid {kind}: {reason}")]
    InvalidObject {
        kind: &'static str,
        reason: String,
    },
}
