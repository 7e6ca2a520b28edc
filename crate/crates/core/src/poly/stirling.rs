//! y-versions of the q-Stirling numbers.
//!
//! Second kind `S_q(n,k,y)`: connection coefficients in
//! `X^n = sum_k S_q(n,k,y) prod_{j=0}^{k-1} (X - [j]_q (1 - y q^{-j}))`,
//! computed by the recurrence
//! `S_q(n,k,y) = S_q(n-1,k-1,y) + [k]_q (1 - y q^{-k}) S_q(n-1,k,y)`.
//!
//! First kind `s_q(n,k,y)`: coefficients of the expanded product, the
//! inverse matrix of the second kind.
//!
//! Both are Laurent in q. A closed form for `S_q` is verified at rational
//! points, together with the partial-fraction coefficients `gamma_k(i)`
//! behind it.

use num::{BigRational, One, Zero};

use crate::algebra::qseries::{
    q_binomial_at, q_factorial_at, q_int, q_int_at, q_pochhammer_at, q_power_at,
};
use crate::algebra::{rat_pow, BiLaurent};
use crate::error::{Error, Result};

/// `S_q(n, k, y)` with symbolic `y`; zero outside `0 <= k <= n`.
pub fn stirling_s2(n: usize, k: usize) -> BiLaurent {
    stirling_s2_with(n, k, &BiLaurent::var_y())
}

/// `S_q(n, k, y0)` for an arbitrary ring element `y0` in place of `y`.
pub fn stirling_s2_with(n: usize, k: usize, y0: &BiLaurent) -> BiLaurent {
    if k > n {
        return BiLaurent::zero();
    }
    // row-by-row over n', keeping the full row of k' values
    let mut row: Vec<BiLaurent> = vec![BiLaurent::one()]; // n' = 0
    for np in 1..=n {
        let width = np.min(k + 1);
        let mut next = vec![BiLaurent::zero(); width + 1];
        for kp in 1..=width {
            let prev_lower = row.get(kp - 1).cloned().unwrap_or_else(BiLaurent::zero);
            let prev_same = row.get(kp).cloned().unwrap_or_else(BiLaurent::zero);
            let factor = q_int(kp as i64)
                .unwrap()
                .mul_ref(&BiLaurent::one().sub_ref(&y0.mul_monomial(0, -(kp as i64))));
            next[kp] = prev_lower.add_ref(&factor.mul_ref(&prev_same));
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(BiLaurent::zero)
}

/// `s_q(n, k, y)` with symbolic `y`: coefficient of `X^k` in
/// `prod_{j=0}^{n-1} (X - [j]_q (1 - y q^{-j}))`.
pub fn stirling_s1(n: usize, k: usize) -> BiLaurent {
    stirling_s1_with(n, k, &BiLaurent::var_y())
}

/// `s_q(n, k, y0)` for an arbitrary ring element `y0`.
pub fn stirling_s1_with(n: usize, k: usize, y0: &BiLaurent) -> BiLaurent {
    if k > n {
        return BiLaurent::zero();
    }
    // expand the product as coefficients in X
    let mut coeffs: Vec<BiLaurent> = vec![BiLaurent::one()];
    for j in 0..n {
        let root = q_int(j as i64)
            .unwrap()
            .mul_ref(&BiLaurent::one().sub_ref(&y0.mul_monomial(0, -(j as i64))));
        let mut next = vec![BiLaurent::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] = next[d + 1].add_ref(c);
            next[d] = next[d].sub_ref(&c.mul_ref(&root));
        }
        coeffs = next;
    }
    coeffs.get(k).cloned().unwrap_or_else(BiLaurent::zero)
}

/// Closed form for `S_q(n, k, y)` evaluated at a rational `(y, q)`:
///
/// `q^{-C(k,2)} / k!_q * sum_{i=1}^k [k i]_q y^{i-k} q^{k^2 - i^2}
///  ([i]_q (1 - q^{-i} y))^n / ((q^{1-2i} y; q)_i (q^{1+2i} / y; q)_{k-i})`
///
/// Errors with [`Error::PoleAtSample`] when a denominator factor vanishes.
pub fn stirling_s2_closed_at(
    n: usize,
    k: usize,
    y: &BigRational,
    q: &BigRational,
) -> Result<BigRational> {
    if k > n {
        return Ok(BigRational::zero());
    }
    if k == 0 {
        return Ok(if n == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        });
    }
    if y.is_zero() || q.is_zero() {
        return Err(Error::PoleAtSample);
    }
    let (n_i, k_i) = (n as i64, k as i64);
    let kfact = q_factorial_at(k_i, q)?;
    if kfact.is_zero() {
        return Err(Error::PoleAtSample);
    }
    let mut total = BigRational::zero();
    for i in 1..=k_i {
        let p1 = q_pochhammer_at(&(rat_pow(q, 1 - 2 * i)? * y), q, i)?;
        let p2 = q_pochhammer_at(&(rat_pow(q, 1 + 2 * i)? / y), q, k_i - i)?;
        let den = p1 * p2;
        if den.is_zero() {
            return Err(Error::PoleAtSample);
        }
        let base = q_int_at(i, q)? * (BigRational::one() - rat_pow(q, -i)? * y);
        let num = q_binomial_at(k_i, i, q)?
            * rat_pow(y, i - k_i)?
            * q_power_at(q, k_i * k_i - i * i)?
            * rat_pow(&base, n_i)?;
        total += num / den;
    }
    Ok(q_power_at(q, -(k_i * (k_i - 1) / 2))? / kfact * total)
}

/// Partial-fraction coefficient
/// `gamma_k(i) = (1/k!_q) [k i]_q y^{i-k} q^{C(k,2)+k-i^2}
///               / ((q^{1-2i} y; q)_i (q^{1+2i}/y; q)_{k-i})`
/// at a rational `(y, q)`.
pub fn partial_fraction_gamma(
    k: usize,
    i: usize,
    y: &BigRational,
    q: &BigRational,
) -> Result<BigRational> {
    if i > k {
        return Err(Error::NegativeIndex);
    }
    if k == 0 {
        return Ok(BigRational::one());
    }
    if y.is_zero() || q.is_zero() {
        return Err(Error::PoleAtSample);
    }
    let (k_i, i_i) = (k as i64, i as i64);
    let kfact = q_factorial_at(k_i, q)?;
    let p1 = q_pochhammer_at(&(rat_pow(q, 1 - 2 * i_i)? * y), q, i_i)?;
    let p2 = q_pochhammer_at(&(rat_pow(q, 1 + 2 * i_i)? / y), q, k_i - i_i)?;
    let den = kfact * p1 * p2;
    if den.is_zero() {
        return Err(Error::PoleAtSample);
    }
    let num = q_binomial_at(k_i, i_i, q)?
        * rat_pow(y, i_i - k_i)?
        * q_power_at(q, k_i * (k_i - 1) / 2 + k_i - i_i * i_i)?;
    Ok(num / den)
}

/// Verify, after clearing denominators, that
/// `t^k = sum_{i=0}^k gamma_k(i) prod_{j != i} (1 - [j]_q t (1 - q^{-j} y))`
/// holds at every supplied `t` value. Both sides are degree-`k` polynomials
/// in `t`, so `k+1` distinct points already force the identity.
pub fn partial_fraction_identity_holds(
    k: usize,
    y: &BigRational,
    q: &BigRational,
    t_values: &[BigRational],
) -> Result<bool> {
    let gammas: Vec<BigRational> = (0..=k)
        .map(|i| partial_fraction_gamma(k, i, y, q))
        .collect::<Result<_>>()?;
    let factor = |j: i64, t: &BigRational| -> Result<BigRational> {
        Ok(BigRational::one()
            - q_int_at(j, q)? * t * (BigRational::one() - rat_pow(q, -j)? * y))
    };
    for t in t_values {
        let lhs = rat_pow(t, k as i64)?;
        let mut rhs = BigRational::zero();
        for (i, g) in gammas.iter().enumerate() {
            let mut prod = BigRational::one();
            for j in 0..=k {
                if j != i {
                    prod *= factor(j as i64, t)?;
                }
            }
            rhs += g * prod;
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
