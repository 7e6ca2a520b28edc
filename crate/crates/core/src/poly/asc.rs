//! Al-Salam-Chihara polynomials `Q_n(x; alpha, beta | q)` at exact rational
//! parameters: the three-term recurrence, the three terminating basic
//! hypergeometric forms, and the linearization coefficients
//! `C_{n1,n2}^{n3}` by closed double sum and by basis expansion.
//!
//! Recurrence: `Q_{n+1} = (2x - (alpha+beta) q^n) Q_n
//!              - (1 - q^n)(1 - alpha beta q^{n-1}) Q_{n-1}`.
//!
//! Vanishing convention in closed sums: any `1/(q;q)_m` with `m < 0` kills
//! the term.

use num::{BigRational, One, Zero};

use crate::algebra::qseries::{q_pochhammer_at, q_power_at};
use crate::algebra::rat_pow;
use crate::error::{Error, Result};

/// Dense rational polynomial in `x`; coefficient `i` belongs to `x^i`.
pub type RatPoly = Vec<BigRational>;

fn rp_trim(p: &mut RatPoly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn rp_add(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    let mut out: RatPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
        .collect();
    rp_trim(&mut out);
    out
}

fn rp_scale(a: &RatPoly, c: &BigRational) -> RatPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|v| v * c).collect()
}

fn rp_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, av) in a.iter().enumerate() {
        for (j, bv) in b.iter().enumerate() {
            out[i + j] += av * bv;
        }
    }
    rp_trim(&mut out);
    out
}

/// Horner evaluation.
pub fn rat_poly_eval(p: &RatPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// `Q_n(x; alpha, beta | q)` by the recurrence. Degree `n`, leading
/// coefficient `2^n`.
pub fn asc_q_poly(n: usize, alpha: &BigRational, beta: &BigRational, q: &BigRational) -> RatPoly {
    let two_x = vec![BigRational::zero(), BigRational::from_integer(2.into())];
    let mut prev: RatPoly = Vec::new();
    let mut cur: RatPoly = vec![BigRational::one()];
    for m in 0..n {
        let qm = q_power_at(q, m as i64).expect("non-negative exponent");
        let shift = vec![-((alpha + beta) * &qm)];
        let lam = if m == 0 {
            BigRational::zero()
        } else {
            (BigRational::one() - &qm)
                * (BigRational::one() - alpha * beta * q_power_at(q, m as i64 - 1).unwrap())
        };
        let next = rp_add(
            &rp_mul(&rp_add(&two_x, &shift), &cur),
            &rp_scale(&prev, &-lam),
        );
        prev = cur;
        cur = next;
    }
    cur
}

/// Which of the three terminating hypergeometric expressions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperForm {
    /// `(alpha beta; q)_n alpha^-n 3phi2(q^-n, alpha u, alpha/u; alpha beta, 0 | q; q)`
    Phi32,
    /// `(alpha u; q)_n u^-n 2phi1(q^-n, beta/u; q^{1-n}/(alpha u) | q; q u / alpha)`
    Phi21A,
    /// `(beta/u; q)_n u^n 2phi1(q^-n, alpha u; q^{1-n} u / beta | q; q / (beta u))`
    Phi21B,
}

fn nonzero(v: &BigRational) -> Result<&BigRational> {
    if v.is_zero() {
        Err(Error::PoleAtSample)
    } else {
        Ok(v)
    }
}

/// Terminating sum `sum_{k=0}^n (q^-n;q)_k (a2;q)_k [(a3;q)_k] z^k /
/// ((q;q)_k (b;q)_k)`; `a3 = None` drops that factor, `b = None` means the
/// lower parameter 0 (whose Pochhammer is 1).
fn terminating_phi(
    n: usize,
    a2: &BigRational,
    a3: Option<&BigRational>,
    b: Option<&BigRational>,
    q: &BigRational,
    z: &BigRational,
) -> Result<BigRational> {
    let qinv_n = rat_pow(q, -(n as i64)).map_err(|_| Error::PoleAtSample)?;
    let mut total = BigRational::zero();
    for k in 0..=(n as i64) {
        let mut num = q_pochhammer_at(&qinv_n, q, k)? * q_pochhammer_at(a2, q, k)?;
        if let Some(a3) = a3 {
            num *= q_pochhammer_at(a3, q, k)?;
        }
        let mut den = q_pochhammer_at(q, q, k)?;
        if let Some(b) = b {
            den *= q_pochhammer_at(b, q, k)?;
        }
        if den.is_zero() {
            return Err(Error::PoleAtSample);
        }
        total += num / den * rat_pow(z, k).map_err(|_| Error::PoleAtSample)?;
    }
    Ok(total)
}

/// Evaluate the chosen explicit expression at `x = (u + 1/u) / 2`.
///
/// Errors with [`Error::PoleAtSample`] whenever a required factor vanishes
/// or is inverted at zero; the caller resamples.
pub fn asc_hypergeometric(
    n: usize,
    u: &BigRational,
    alpha: &BigRational,
    beta: &BigRational,
    q: &BigRational,
    form: HyperForm,
) -> Result<BigRational> {
    nonzero(u)?;
    nonzero(q)?;
    let n_i = n as i64;
    match form {
        HyperForm::Phi32 => {
            nonzero(alpha)?;
            let ab = alpha * beta;
            let pref = q_pochhammer_at(&ab, q, n_i)? * rat_pow(alpha, -n_i)?;
            let a2 = alpha * u;
            let a3 = alpha / u;
            let s = terminating_phi(n, &a2, Some(&a3), Some(&ab), q, q)?;
            Ok(pref * s)
        }
        HyperForm::Phi21A => {
            nonzero(alpha)?;
            let au = alpha * u;
            nonzero(&au)?;
            let pref = q_pochhammer_at(&au, q, n_i)? * rat_pow(u, -n_i)?;
            let a2 = beta / u;
            let b = rat_pow(q, 1 - n_i)? / &au;
            let z = q * u / alpha;
            let s = terminating_phi(n, &a2, None, Some(&b), q, &z)?;
            Ok(pref * s)
        }
        HyperForm::Phi21B => {
            nonzero(beta)?;
            let bu = beta / u;
            let pref = q_pochhammer_at(&bu, q, n_i)? * rat_pow(u, n_i)?;
            let a2 = alpha * u;
            let b = rat_pow(q, 1 - n_i)? * u / beta;
            let z = q / (beta * u);
            let s = terminating_phi(n, &a2, None, Some(&b), q, &z)?;
            Ok(pref * s)
        }
    }
}

/// Evaluation route for [`asc_linearize_c`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CMethod {
    /// The closed double sum over `(m2, m3)`.
    Closed,
    /// Expansion of `Q_{n1} Q_{n2}` in the `Q` basis by leading-term
    /// elimination (independent linear-algebra oracle).
    Basis,
}

/// Linearization coefficient `C_{n1,n2}^{n3}(alpha, beta; q)` in
/// `Q_{n1} Q_{n2} = sum_{n3} C Q_{n3}`.
pub fn asc_linearize_c(
    n1: usize,
    n2: usize,
    n3: usize,
    alpha: &BigRational,
    beta: &BigRational,
    q: &BigRational,
    method: CMethod,
) -> Result<BigRational> {
    match method {
        CMethod::Closed => c_closed(n1, n2, n3, alpha, beta, q),
        CMethod::Basis => Ok(c_basis(n1, n2, alpha, beta, q)
            .get(n3)
            .cloned()
            .unwrap_or_else(BigRational::zero)),
    }
}

fn c_closed(
    n1: usize,
    n2: usize,
    n3: usize,
    alpha: &BigRational,
    beta: &BigRational,
    q: &BigRational,
) -> Result<BigRational> {
    let (n1, n2, n3) = (n1 as i64, n2 as i64, n3 as i64);
    // outside |n1-n2| <= n3 <= n1+n2 every term dies on a negative
    // (q;q) index, so the sum below comes out zero on its own
    let ab = alpha * beta;
    let poch_ab_n3 = q_pochhammer_at(&ab, q, n3)?;
    if poch_ab_n3.is_zero() {
        return Err(Error::PoleAtSample);
    }
    let sign = if (n1 + n2 + n3) % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    let pref = sign * q_pochhammer_at(q, q, n1)? * q_pochhammer_at(q, q, n2)? / poch_ab_n3;

    let mut total = BigRational::zero();
    for m3 in 0..=(n1 + n2 + n3) {
        let i2 = m3 + n1 - n3;
        let i3 = m3 + n1 - n2;
        if i2 < 0 || i3 < 0 {
            continue;
        }
        for m2 in 0..=(n3 + n2 - n1 - 2 * m3) {
            let m = n3 + n2 - n1 - m2 - 2 * m3;
            if m < 0 {
                continue;
            }
            let num = q_pochhammer_at(&ab, q, n1 + m3)?
                * rat_pow(alpha, m2)?
                * rat_pow(beta, m)?
                * q_power_at(q, m2 * (m2 - 1) / 2 + m * (m - 1) / 2)?;
            let den = q_pochhammer_at(q, q, m)?
                * q_pochhammer_at(q, q, m2)?
                * q_pochhammer_at(q, q, i2)?
                * q_pochhammer_at(q, q, i3)?
                * q_pochhammer_at(q, q, m3)?;
            if den.is_zero() {
                return Err(Error::PoleAtSample);
            }
            total += num / den;
        }
    }
    Ok(pref * total)
}

/// All coefficients of `Q_{n1} Q_{n2}` in the `Q` basis, index = `n3`.
/// Uses the exact leading coefficients `2^n` for elimination.
pub fn c_basis(
    n1: usize,
    n2: usize,
    alpha: &BigRational,
    beta: &BigRational,
    q: &BigRational,
) -> Vec<BigRational> {
    let mut rem = rp_mul(
        &asc_q_poly(n1, alpha, beta, q),
        &asc_q_poly(n2, alpha, beta, q),
    );
    let mut coeffs = vec![BigRational::zero(); n1 + n2 + 1];
    for d in (0..=(n1 + n2)).rev() {
        if rem.len() <= d {
            continue;
        }
        let lead = rem[d].clone();
        if lead.is_zero() {
            rp_trim(&mut rem);
            continue;
        }
        let c = lead / rat_pow(&BigRational::from_integer(2.into()), d as i64).unwrap();
        rem = rp_add(&rem, &rp_scale(&asc_q_poly(d, alpha, beta, q), &-c.clone()));
        coeffs[d] = c;
    }
    debug_assert!(rem.is_empty(), "basis expansion left a remainder");
    coeffs
}
