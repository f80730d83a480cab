use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the exact computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Matrix or vector dimensions do not fit together.
    Shape(String),
    /// A matrix expected to lie in `GL(n, Z)` has determinant other than ±1.
    NotUnimodular,
    /// Cone data violates an invariant (primitive generators, spanning, ...).
    InvalidCone(String),
    /// Bracket class data violates an invariant (code weight, exponent order).
    InvalidClass(String),
    /// A graph passed to a graphical construction is not connected.
    DisconnectedGraph,
    /// Quadratic form is not positive definite.
    NotPositiveDefinite,
    /// Form whose minimal vectors do not span the symmetric square.
    NotPerfect,
    /// The shipped cone catalog does not reach the requested depth.
    CatalogIncomplete(String),
    /// A series is not invertible (constant term not a unit).
    NotInvertible,
    /// Parse failure for a textual representation.
    Parse(String),
    /// Request outside the supported computational range.
    OutOfRange(String),
    /// A computed value failed an internal exactness check.
    Inconsistent(String),
    /// Unknown catalog name or selector.
    Unknown(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape(s) => write!(f, "shape mismatch: {s}"),
            Error::NotUnimodular => f.write_str("matrix is not unimodular"),
            Error::InvalidCone(s) => write!(f, "invalid cone: {s}"),
            Error::InvalidClass(s) => write!(f, "invalid bracket class: {s}"),
            Error::DisconnectedGraph => f.write_str("graph is not connected"),
            Error::NotPositiveDefinite => f.write_str("quadratic form is not positive definite"),
            Error::NotPerfect => f.write_str("quadratic form is not perfect"),
            Error::CatalogIncomplete(s) => write!(f, "catalog incomplete {s}"),
            Error::NotInvertible => f.write_str("series is not invertible"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::OutOfRange(s) => write!(f, "out of range: {s}"),
            Error::Inconsistent(s) => write!(f, "inconsistent result: {s}"),
            Error::Unknown(s) => write!(f, "unknown name: {s}"),
        }
    }
}

impl core::error::Error for Error {}
