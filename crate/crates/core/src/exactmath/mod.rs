//! Exact arithmetic substrate: arbitrary-precision integers and rationals
//! (via `num-bigint` / `num-rational`), dense integer polynomials, and
//! truncated bivariate formal power series with rational coefficients.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads.

mod biseries;
mod poly;

pub use biseries::{series_compose, BiSeries};
pub use poly::IntPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// `n!` as a `BigInt`.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// Odd double factorial `(2m-1)!! = 1 * 3 * ... * (2m-1)`, with `(-1)!! = 1`.
pub fn odd_double_factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::from(1), |acc, i| acc * BigInt::from(2 * i - 1))
}
