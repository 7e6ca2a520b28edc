//! The monic q-Laguerre family `L_n(x; q)`.
//!
//! Two routes produce the same polynomial:
//!
//! recurrence:  `L_{n+1} = (x - y[n+1]_q - [n]_q) L_n - y [n]_q^2 L_{n-1}`
//!
//! explicit:    `L_n = sum_{k=0}^n (-1)^(n-k) (n!_q / k!_q) [n k]_q q^{k(k-n)}
//!              y^{n-k} prod_{j=0}^{k-1} (x - (1 - y q^{-j}) [j]_q)`
//!
//! The explicit route passes through negative q-powers that must cancel in
//! the final coefficients.

use crate::algebra::qseries::{q_binomial, q_int};
use crate::algebra::{BiLaurent, XPoly};

/// Construction route for [`laguerre_poly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaguerreMethod {
    Recurrence,
    Explicit,
}

/// Monic degree-`n` q-Laguerre polynomial.
pub fn laguerre_poly(n: usize, method: LaguerreMethod) -> XPoly {
    match method {
        LaguerreMethod::Recurrence => by_recurrence(n),
        LaguerreMethod::Explicit => by_explicit(n),
    }
}

fn by_recurrence(n: usize) -> XPoly {
    let mut prev = XPoly::zero();
    let mut cur = XPoly::one();
    for m in 0..n {
        let m = m as i64;
        let b = BiLaurent::var_y()
            .mul_ref(&q_int(m + 1).expect("non-negative"))
            .add_ref(&q_int(m).expect("non-negative"));
        let lam = BiLaurent::var_y().mul_ref(&q_int(m).expect("non-negative").pow(2));
        let next = XPoly::var_x()
            .sub_ref(&XPoly::constant(b))
            .mul_ref(&cur)
            .sub_ref(&prev.scale(&lam));
        prev = cur;
        cur = next;
    }
    cur
}

fn by_explicit(n: usize) -> XPoly {
    let n_i = n as i64;
    let mut total = XPoly::zero();
    for k in 0..=n_i {
        // n!_q / k!_q = prod_{j=k+1}^{n} [j]_q, computed without division
        let mut fact_ratio = BiLaurent::one();
        for j in (k + 1)..=n_i {
            fact_ratio = fact_ratio.mul_ref(&q_int(j).expect("non-negative"));
        }
        let sign = if (n_i - k) % 2 == 0 { 1 } else { -1 };
        let coeff = BiLaurent::from_i64(sign)
            .mul_ref(&fact_ratio)
            .mul_ref(&q_binomial(n_i, k).expect("non-negative"))
            .mul_monomial(n_i - k, k * (k - n_i));
        let mut prod = XPoly::one();
        for j in 0..k {
            // x - (1 - y q^{-j}) [j]_q
            let shift = BiLaurent::one()
                .sub_ref(&BiLaurent::monomial(num::BigRational::from_integer(1.into()), 1, -j))
                .mul_ref(&q_int(j).expect("non-negative"));
            prod = prod.mul_ref(&XPoly::var_x().sub_ref(&XPoly::constant(shift)));
        }
        total = total.add_ref(&prod.scale(&coeff));
    }
    total
}

/// True when every coefficient is a genuine polynomial in q (no Laurent
/// residue survived the explicit route).
pub fn is_q_polynomial(p: &XPoly) -> bool {
    p.coeffs().iter().all(|c| c.is_polynomial_in_q())
}
