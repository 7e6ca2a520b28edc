//! Exact scalar and polynomial arithmetic plus q-calculus primitives.
//!
//! Everything downstream is built on this ring: arbitrary-precision
//! rationals, sparse `(y, q)` Laurent polynomials, dense polynomials in `x`,
//! truncated series in `t`, and the q-integer / q-factorial / q-binomial /
//! q-Pochhammer family.

pub mod bilaurent;
pub mod qfrac;
pub mod qseries;
pub mod series;
pub mod xpoly;

pub use bilaurent::{rat_pow, BiLaurent};
pub use series::TruncatedSeries;
pub use xpoly::XPoly;

use num::BigRational;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Parse a rational from `p` or `p/r` decimal text. No floats anywhere.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}
