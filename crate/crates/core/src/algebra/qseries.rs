//! q-calculus primitives: q-integers, q-factorials, q-binomials and
//! q-Pochhammer symbols, both symbolic (values in the `(y, q)` ring) and at
//! exact rational points.
//!
//! Conventions: `[n]_q = 1 + q + ... + q^(n-1)`, `n!_q = prod_j [j]_q`,
//! `(a;q)_n = prod_{j=0}^{n-1} (1 - a q^j)`, and `[n choose k]_q = 0` for
//! `k < 0` or `k > n`.

use num::{BigRational, One, Zero};

use super::bilaurent::{rat_pow, BiLaurent};
use crate::error::{Error, Result};

/// `[n]_q` as a polynomial in q.
pub fn q_int(n: i64) -> Result<BiLaurent> {
    if n < 0 {
        return Err(Error::NegativeIndex);
    }
    let mut p = BiLaurent::zero();
    for j in 0..n {
        p = p.add_ref(&BiLaurent::q_pow(j));
    }
    Ok(p)
}

/// `n!_q`.
pub fn q_factorial(n: i64) -> Result<BiLaurent> {
    if n < 0 {
        return Err(Error::NegativeIndex);
    }
    let mut p = BiLaurent::one();
    for j in 1..=n {
        p = p.mul_ref(&q_int(j)?);
    }
    Ok(p)
}

/// Gaussian binomial `[n choose k]_q`, via the q-Pascal recurrence
/// `[n k] = [n-1 k-1] + q^k [n-1 k]`.
pub fn q_binomial(n: i64, k: i64) -> Result<BiLaurent> {
    if n < 0 {
        return Err(Error::NegativeIndex);
    }
    if k < 0 || k > n {
        return Ok(BiLaurent::zero());
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    // row-by-row Pascal triangle, keeping only columns 0..=k
    let mut row: Vec<BiLaurent> = vec![BiLaurent::one()];
    for m in 1..=n {
        let width = k.min(m);
        let mut next = Vec::with_capacity(width + 1);
        next.push(BiLaurent::one());
        for j in 1..=width {
            let left = row.get(j - 1).cloned().unwrap_or_else(BiLaurent::zero);
            let up = row.get(j).cloned().unwrap_or_else(BiLaurent::zero);
            next.push(left.add_ref(&up.mul_monomial(0, j as i64)));
        }
        row = next;
    }
    Ok(row[k].clone())
}

/// `(a;q)_n` for a symbolic first argument.
pub fn q_pochhammer(a: &BiLaurent, n: i64) -> Result<BiLaurent> {
    if n < 0 {
        return Err(Error::NegativeIndex);
    }
    let mut p = BiLaurent::one();
    for j in 0..n {
        let factor = BiLaurent::one().sub_ref(&a.mul_monomial(0, j));
        p = p.mul_ref(&factor);
    }
    Ok(p)
}

/// `[n]_q` at a rational point.
pub fn q_int_at(n: i64, q: &BigRational) -> Result<BigRational> {
    if n < 0 {
        return Err(Error::NegativeIndex);
    }
    let mut acc = BigRational::zero();
    let mut pw = BigRational::one();
    for _ in 0..n {
        acc += &pw;
        pw *= q;
    }
    Ok(acc)
}

/// `n!_q` at a rational point.
pub fn q_factorial_at(n: i64, q: &BigRational) -> Result<BigRational> {
    if n < 0 {
        return Err(Error::NegativeIndex);
    }
    let mut acc = BigRational::one();
    for j in 1..=n {
        acc *= q_int_at(j, q)?;
    }
    Ok(acc)
}

/// `[n choose k]_q` at a rational point; requires `j!_q != 0` for `j <= k`,
/// which holds whenever `q` is not a root of unity (for rationals: `q != ±1`
/// suffices beyond the trivial cases).
pub fn q_binomial_at(n: i64, k: i64, q: &BigRational) -> Result<BigRational> {
    if n < 0 {
        return Err(Error::NegativeIndex);
    }
    if k < 0 || k > n {
        return Ok(BigRational::zero());
    }
    let den = q_factorial_at(k, q)? * q_factorial_at(n - k, q)?;
    if den.is_zero() {
        return Err(Error::PoleAtSample);
    }
    Ok(q_factorial_at(n, q)? / den)
}

/// `(a;q)_n` at a rational point.
pub fn q_pochhammer_at(a: &BigRational, q: &BigRational, n: i64) -> Result<BigRational> {
    if n < 0 {
        return Err(Error::NegativeIndex);
    }
    let mut acc = BigRational::one();
    let mut pw = BigRational::one();
    for _ in 0..n {
        acc *= BigRational::one() - a * &pw;
        pw *= q;
    }
    Ok(acc)
}

/// `q^e` at a rational point, for any integer exponent.
pub fn q_power_at(q: &BigRational, e: i64) -> Result<BigRational> {
    rat_pow(q, e)
}
