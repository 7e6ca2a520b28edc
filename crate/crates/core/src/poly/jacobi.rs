//! Three-term recurrence data and Motzkin-path moments.
//!
//! A monic orthogonal family is determined by its Jacobi coefficients via
//! `p_{n+1} = (x - b_n) p_n - lambda_n p_{n-1}`; its n-th moment is the
//! total weight of Motzkin paths of length n (level step at height i
//! weighs `b_i`, down step from height i weighs `lambda_i`, up steps
//! weigh 1).
//!
//! For the rescaled Al-Salam-Chihara family with parameters `y` and
//! `B = alpha beta`:
//!
//!   b_n      = ((1 + B y) q^n - (1 + y)) / (q - 1)
//!   lambda_n = y (1 - q^n) (1 - B q^{n-1}) / (1 - q)^2
//!
//! At `B = q` these reduce exactly to `b_n = y[n+1]_q + [n]_q` and
//! `lambda_n = y [n]_q^2`; at `B = 0`, `y = a(1-q)` they give the
//! q-Charlier pair `b_n = a + [n]_q`, `lambda_n = a [n]_q`. For generic
//! parameters the division by `q - 1` only exists with `q` a number, so the
//! general case is carried at exact rational points.

use num::{BigRational, One, Zero};

use crate::algebra::qseries::q_int;
use crate::algebra::{rat_pow, BiLaurent};
use crate::error::{Error, Result};

/// The semantic parameter pair of the rescaled Al-Salam-Chihara family,
/// `y = 1/alpha^2` and `B = alpha beta`, either as ring elements with `q`
/// symbolic or as an exact rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AscParams {
    /// `q` stays the ring variable; `y` and `B` are ring elements. The
    /// divisions in the Jacobi coefficients must come out exact.
    Symbolic { y: BiLaurent, big_b: BiLaurent },
    /// Fully rational parameter point `(y, B, q)`.
    Point {
        y: BigRational,
        big_b: BigRational,
        q: BigRational,
    },
}

impl AscParams {
    /// q-Laguerre specialization: symbolic `y`, `B = q`.
    pub fn laguerre() -> Self {
        AscParams::Symbolic {
            y: BiLaurent::var_y(),
            big_b: BiLaurent::var_q(),
        }
    }

    /// q-Charlier specialization: `y = a (1 - q)` with the `y` variable
    /// standing for `a`, and `B = 0`.
    pub fn charlier() -> Self {
        AscParams::Symbolic {
            y: BiLaurent::var_y().mul_ref(&BiLaurent::one().sub_ref(&BiLaurent::var_q())),
            big_b: BiLaurent::zero(),
        }
    }

    /// Exact rational parameter point; requires `q` distinct from 0 and 1.
    pub fn at_point(y: BigRational, big_b: BigRational, q: BigRational) -> Self {
        AscParams::Point { y, big_b, q }
    }
}

/// Jacobi coefficients `n -> (b_n, lambda_n)` of a monic family.
pub struct JacobiCoefficients {
    b: Box<dyn Fn(usize) -> BiLaurent + Send + Sync>,
    lam: Box<dyn Fn(usize) -> BiLaurent + Send + Sync>,
}

impl JacobiCoefficients {
    pub fn new(
        b: impl Fn(usize) -> BiLaurent + Send + Sync + 'static,
        lam: impl Fn(usize) -> BiLaurent + Send + Sync + 'static,
    ) -> Self {
        JacobiCoefficients {
            b: Box::new(b),
            lam: Box::new(lam),
        }
    }

    pub fn b(&self, n: usize) -> BiLaurent {
        (self.b)(n)
    }

    pub fn lam(&self, n: usize) -> BiLaurent {
        (self.lam)(n)
    }

    /// The q-Laguerre coefficients `b_n = y[n+1]_q + [n]_q`,
    /// `lambda_n = y [n]_q^2`.
    pub fn laguerre() -> Self {
        JacobiCoefficients::new(
            |n| {
                BiLaurent::var_y()
                    .mul_ref(&q_int(n as i64 + 1).unwrap())
                    .add_ref(&q_int(n as i64).unwrap())
            },
            |n| BiLaurent::var_y().mul_ref(&q_int(n as i64).unwrap().pow(2)),
        )
    }
}

/// Jacobi coefficients of the rescaled family for the given parameters.
///
/// Symbolic parameters must make the exact divisions by `q - 1` and
/// `(1 - q)^2` succeed (the q-Laguerre and q-Charlier sets do), otherwise
/// [`Error::NotDivisible`] is raised. Rational points with `q = 1` raise
/// [`Error::PoleAtSample`].
pub fn jacobi_for(params: &AscParams) -> Result<JacobiCoefficients> {
    match params {
        AscParams::Symbolic { y, big_b } => {
            let (y1, b1) = (y.clone(), big_b.clone());
            let (y2, b2) = (y.clone(), big_b.clone());
            // validate small indices eagerly so a bad parameter set errors
            // here rather than deep inside a moment computation
            for n in 0..3 {
                symbolic_b(&y1, &b1, n)?;
                symbolic_lam(&y1, &b1, n)?;
            }
            Ok(JacobiCoefficients::new(
                move |n| symbolic_b(&y1, &b1, n).expect("validated divisibility"),
                move |n| symbolic_lam(&y2, &b2, n).expect("validated divisibility"),
            ))
        }
        AscParams::Point { y, big_b, q } => {
            if q.is_one() || q.is_zero() {
                return Err(Error::PoleAtSample);
            }
            let (y1, b1, q1) = (y.clone(), big_b.clone(), q.clone());
            let (y2, b2, q2) = (y.clone(), big_b.clone(), q.clone());
            Ok(JacobiCoefficients::new(
                move |n| BiLaurent::constant(point_b(&y1, &b1, &q1, n)),
                move |n| BiLaurent::constant(point_lam(&y2, &b2, &q2, n)),
            ))
        }
    }
}

fn symbolic_b(y: &BiLaurent, big_b: &BiLaurent, n: usize) -> Result<BiLaurent> {
    // ((1 + B y) q^n - (1 + y)) / (q - 1)
    let one_plus_by = BiLaurent::one().add_ref(&big_b.mul_ref(y));
    let num = one_plus_by
        .mul_monomial(0, n as i64)
        .sub_ref(&BiLaurent::one().add_ref(y));
    let den = BiLaurent::var_q().sub_ref(&BiLaurent::one());
    num.exact_div(&den)
}

fn symbolic_lam(y: &BiLaurent, big_b: &BiLaurent, n: usize) -> Result<BiLaurent> {
    if n == 0 {
        return Ok(BiLaurent::zero());
    }
    // y (1 - q^n)(1 - B q^{n-1}) / (1 - q)^2
    let num = y
        .mul_ref(&BiLaurent::one().sub_ref(&BiLaurent::q_pow(n as i64)))
        .mul_ref(&BiLaurent::one().sub_ref(&big_b.mul_monomial(0, n as i64 - 1)));
    let den = BiLaurent::one().sub_ref(&BiLaurent::var_q()).pow(2);
    num.exact_div(&den)
}

/// `b_n` at a rational point; requires `q != 1`.
pub fn point_b(y: &BigRational, big_b: &BigRational, q: &BigRational, n: usize) -> BigRational {
    let qn = rat_pow(q, n as i64).expect("non-negative exponent");
    ((BigRational::one() + big_b * y) * qn - (BigRational::one() + y))
        / (q - BigRational::one())
}

/// `lambda_n` at a rational point; requires `q != 1`.
pub fn point_lam(y: &BigRational, big_b: &BigRational, q: &BigRational, n: usize) -> BigRational {
    if n == 0 {
        return BigRational::zero();
    }
    let qn = rat_pow(q, n as i64).expect("non-negative exponent");
    let qn1 = rat_pow(q, n as i64 - 1).expect("non-negative exponent");
    let omq = BigRational::one() - q;
    y * (BigRational::one() - qn) * (BigRational::one() - big_b * qn1) / (&omq * &omq)
}

/// n-th moment of the family as a weighted Motzkin path sum.
pub fn moments_motzkin(n: usize, jc: &JacobiCoefficients) -> BiLaurent {
    // dp[h] = total weight of length-`step` prefixes ending at height h
    let mut dp = vec![BiLaurent::one()];
    for step in 0..n {
        let remaining = n - step;
        let max_h = dp.len() - 1;
        let mut next = vec![BiLaurent::zero(); (max_h + 2).min(remaining + max_h + 1)];
        for (h, w) in dp.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            // level
            next[h] = next[h].add_ref(&w.mul_ref(&jc.b(h)));
            // up
            if h + 1 < next.len() {
                next[h + 1] = next[h + 1].add_ref(w);
            }
            // down
            if h > 0 {
                next[h - 1] = next[h - 1].add_ref(&w.mul_ref(&jc.lam(h)));
            }
        }
        dp = next;
    }
    dp.into_iter().next().unwrap_or_else(BiLaurent::zero)
}
