//! Linearization coefficients `I(n_1, ..., n_k)` of the q-Laguerre family,
//! by three routes:
//!
//! - functional: apply the moment functional to the expanded product
//!   `L_{n_1} ... L_{n_k}`;
//! - enumeration: `sum over D(n_1,...,n_k) of y^wex q^cr`;
//! - closed3 (k = 3 only):
//!   `sum_s n1!_q n2!_q n3!_q s!_q y^s / ((n1+n2+n3-2s)!_q (s-n3)!_q
//!   (s-n2)!_q (s-n1)!_q) * sum_k [n1+n2+n3-2s k]_q y^k
//!   q^{C(k+1,2) + C(n1+n2+n3-2s-k,2)}` with terms carrying any negative
//!   factorial index vanishing.

use crate::algebra::qfrac::QFrac;
use crate::algebra::qseries::{q_binomial, q_factorial};
use crate::algebra::{BiLaurent, XPoly};
use crate::error::{Error, Result};
use crate::perm::BlockSpec;

use super::laguerre::{laguerre_poly, LaguerreMethod};
use super::moments::{functional_apply, MomentTable};

/// Evaluation route for [`linearize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinMethod {
    Functional,
    Enumeration,
    Closed3,
}

/// `I(n_1, ..., n_k)` for the composition in `blocks`.
pub fn linearize(blocks: &BlockSpec, method: LinMethod, cap: usize) -> Result<BiLaurent> {
    match method {
        LinMethod::Enumeration => blocks.class_polynomial(cap),
        LinMethod::Functional => {
            let mut table = MomentTable::laguerre();
            table.ensure(blocks.total());
            linearize_functional(blocks, &table)
        }
        LinMethod::Closed3 => {
            let s = blocks.sizes();
            if s.len() != 3 {
                return Err(Error::Parse(format!(
                    "closed3 needs exactly 3 blocks, got {}",
                    s.len()
                )));
            }
            linearize_closed3(s[0], s[1], s[2])
        }
    }
}

/// Functional route with a caller-provided moment table (must cover the
/// total degree).
pub fn linearize_functional(blocks: &BlockSpec, table: &MomentTable) -> Result<BiLaurent> {
    let mut product = XPoly::one();
    for &size in blocks.sizes() {
        product = product.mul_ref(&laguerre_poly(size, LaguerreMethod::Recurrence));
    }
    functional_apply(&product, table)
}

/// Closed formula for `I(n_1, n_2, n_3)`; computed over the fraction field
/// in q and collapsed by exact division.
pub fn linearize_closed3(n1: usize, n2: usize, n3: usize) -> Result<BiLaurent> {
    let (n1, n2, n3) = (n1 as i64, n2 as i64, n3 as i64);
    let total = n1 + n2 + n3;
    let s_lo = n1.max(n2).max(n3);
    let s_hi = total / 2;
    let mut acc = QFrac::zero();
    for s in s_lo..=s_hi {
        let m = total - 2 * s;
        let num = q_factorial(n1)?
            .mul_ref(&q_factorial(n2)?)
            .mul_ref(&q_factorial(n3)?)
            .mul_ref(&q_factorial(s)?)
            .mul_monomial(s, 0);
        let den = q_factorial(m)?
            .mul_ref(&q_factorial(s - n3)?)
            .mul_ref(&q_factorial(s - n2)?)
            .mul_ref(&q_factorial(s - n1)?);
        let mut inner = BiLaurent::zero();
        for k in 0..=m {
            let e_q = (k + 1) * k / 2 + (m - k) * (m - k - 1) / 2;
            inner = inner.add_ref(&q_binomial(m, k)?.mul_monomial(k, e_q));
        }
        acc = acc.add(&QFrac::new(num, den)?.mul_poly(&inner));
    }
    let poly = acc.into_polynomial()?;
    if !poly.is_polynomial_in_q() {
        return Err(Error::NotPolynomial);
    }
    Ok(poly)
}
