//! Exact combinatorics behind the stable cohomology of the perfect cone
//! compactification of `A_g` and its partial compactifications.
//!
//! Everything here is exact: integers are arbitrary precision, rationals are
//! kept in lowest terms, and no floating point is used anywhere.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, report
//! rendering and the command line front end live in the `perfcone` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod betti;
pub mod brackets;
pub mod cones;
mod error;
pub mod invariants;
pub mod linalg;
pub mod series;
pub mod stabilizers;
pub mod voronoi;

pub use error::{Error, Result};
pub use linalg::{Int, IntMatrix, Rat, RatMatrix};
pub use series::TruncatedSeries;
