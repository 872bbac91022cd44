//! Exact-arithmetic toolkit for resultants of scaled multihomogeneous
//! polynomial systems: enumeration of determinantal degree vectors, explicit
//! Sylvester / Bezout / hybrid resultant matrices, and a numeric
//! verification oracle. All arithmetic is exact (arbitrary-precision
//! rationals); nothing here uses floating point.

pub mod combinatorics;
pub mod error;
pub mod polyring;

pub use error::{Error, Result};
