//! Exact computer algebra for the Al-Salam-Chihara q-Laguerre polynomials.
//!
//! The crate provides, with no floating point anywhere:
//!
//! - [`algebra`]: arbitrary-precision rationals, sparse `(y, q)` Laurent
//!   polynomials, dense polynomials in `x`, truncated series in `t`, and
//!   q-calculus primitives;
//! - [`perm`]: permutations with the `(wex, cr)` statistics and generalized
//!   derangement classes with their generating polynomials;
//! - [`poly`]: the q-Laguerre and Al-Salam-Chihara families, y-q-Stirling
//!   numbers, moments by four independent routes, the moment functional,
//!   and linearization coefficients;
//! - [`bijection`]: the two `(wex, cr)`-preserving bijections and their
//!   crossing decompositions;
//! - [`verify`]: named cross-verification suites over all of the above.

// index loops mirror the recurrence indices of the formulas they implement
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bijection;
pub mod error;
pub mod perm;
pub mod poly;
pub mod sampling;
pub mod verify;

pub use algebra::{parse_rational, BiLaurent, TruncatedSeries, XPoly};
pub use error::{Error, Result};
pub use perm::{BlockSpec, Permutation};

/// Re-export of the scalar type used for every coefficient.
pub use num::BigRational;
