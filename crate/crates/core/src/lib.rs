//! Exact-arithmetic computation of the Jacobi-Stirling number triangles of
//! both kinds, together with exhaustive enumerators for the combinatorial
//! families that realize their coefficients, executable bijections between
//! those families, and truncated-power-series verification of the associated
//! generating-function identities.
//!
//! Everything here is exact: integers are arbitrary precision, rationals are
//! always reduced, and every identity check is an equality of canonical
//! objects rather than a floating-point comparison.

pub mod bijections;
pub mod error;
pub mod exactmath;
pub mod models;
pub mod series;
pub mod triangles;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
