//! Error type shared by the whole crate.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A system parameter is zero or negative.
    NonPositiveEntry(&'static str),
    /// The scale vector is not sorted nondecreasingly.
    UnsortedScales,
    /// The scale vector has a common factor.
    ScaleGcd(i64),
    /// length(s) does not equal sum(l) + 1.
    LengthMismatch { expected: usize, got: usize },
    /// A tuple argument has the wrong length.
    BadTupleLength { what: &'static str, expected: usize, got: usize },
    /// Index argument outside its valid range.
    OutOfRange(&'static str),
    /// Operation requires the unmixed case s = (1,...,1).
    NotUnmixed,
    /// Operation requires the scaled case s != (1,...,1).
    NotScaled,
    /// Operation requires a single variable group.
    NotHomogeneous,
    /// Source/target degrees do not match the multiplier degree.
    DegreeMismatch(String),
    /// A degree vector is not determinantal where a square matrix is required.
    NotDeterminantal(Vec<i64>),
    /// Evaluation point has a zero coordinate.
    ZeroCoordinate(usize),
    /// A specialization is missing a coefficient indeterminate.
    MissingSymbol(String),
    /// Polynomial division left a nonzero remainder.
    NotDivisible,
    /// Internal consistency failure; indicates a construction bug.
    Internal(String),
}

impl Error {
    /// Process exit code for the CLI: 1 invalid data, 2 non-determinantal,
    /// 3 internal consistency failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::NotDeterminantal(_) => 2,
            Error::NotDivisible | Error::Internal(_) => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveEntry(what) => {
                write!(f, "all entries of {what} must be strictly positive")
            }
            Error::UnsortedScales => write!(f, "scale vector s must be sorted nondecreasingly"),
            Error::ScaleGcd(g) => write!(f, "scale vector s must have gcd 1, found gcd {g}"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length of s must be sum(l) + 1 = {expected}, got {got}")
            }
            Error::BadTupleLength { what, expected, got } => {
                write!(f, "{what} must have length {expected}, got {got}")
            }
            Error::OutOfRange(what) => write!(f, "{what} out of range"),
            Error::NotUnmixed => write!(f, "operation is only defined for s = (1,...,1)"),
            Error::NotScaled => write!(f, "operation is only defined for s != (1,...,1)"),
            Error::NotHomogeneous => write!(f, "operation is only defined for r = 1"),
            Error::DegreeMismatch(msg) => write!(f, "degree mismatch: {msg}"),
            Error::NotDeterminantal(m) => {
                write!(f, "degree vector {m:?} is not determinantal")
            }
            Error::ZeroCoordinate(i) => {
                write!(f, "evaluation point has zero coordinate at position {i}")
            }
            Error::MissingSymbol(name) => {
                write!(f, "specialization is missing a value for {name}")
            }
            Error::NotDivisible => write!(f, "polynomial division left a nonzero remainder"),
            Error::Internal(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
