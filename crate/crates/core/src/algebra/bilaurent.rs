//! Sparse exact polynomials in y and q, Laurent in q.
//!
//! A [`BiLaurent`] is a finite sum `sum c * y^a * q^b` with rational `c`,
//! `a >= 0` and `b` any integer. This ring hosts every symbolic value in the
//! crate: moment polynomials, Stirling numbers, linearization coefficients
//! and derangement polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent pair `(e_y, e_q)`; `e_y >= 0`, `e_q` may be negative.
pub type Exponents = (i32, i32);

/// Sparse bivariate Laurent polynomial in `y` (powers >= 0) and `q`.
///
/// Invariants: no stored zero coefficients, exponent pairs unique, and the
/// map order `(e_y asc, e_q asc)` is the canonical term order used for
/// printing and serialization.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiLaurent {
    terms: BTreeMap<Exponents, BigRational>,
}

fn checked_exps(ey: i64, eq: i64) -> Exponents {
    let ey = i32::try_from(ey).expect("y-exponent overflow");
    let eq = i32::try_from(eq).expect("q-exponent overflow");
    assert!(ey >= 0, "y-exponent must be non-negative");
    (ey, eq)
}

impl BiLaurent {
    pub fn zero() -> Self {
        BiLaurent::default()
    }

    pub fn one() -> Self {
        BiLaurent::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        BiLaurent::monomial(c, 0, 0)
    }

    pub fn from_i64(c: i64) -> Self {
        BiLaurent::constant(BigRational::from_integer(c.into()))
    }

    /// The variable `y`.
    pub fn var_y() -> Self {
        BiLaurent::monomial(BigRational::one(), 1, 0)
    }

    /// The variable `q`.
    pub fn var_q() -> Self {
        BiLaurent::monomial(BigRational::one(), 0, 1)
    }

    /// `q^e` for any integer `e` (negative allowed).
    pub fn q_pow(e: i64) -> Self {
        BiLaurent::monomial(BigRational::one(), 0, e)
    }

    /// Single term `c * y^ey * q^eq`.
    pub fn monomial(c: BigRational, ey: i64, eq: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(checked_exps(ey, eq), c);
        }
        BiLaurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order `(e_y asc, e_q asc)`.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ey: i32, eq: i32) -> BigRational {
        self.terms.get(&(ey, eq)).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert_add(&mut self, key: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, -c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect();
        BiLaurent { terms }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = BiLaurent::zero();
        for ((ay, aq), ac) in &self.terms {
            for ((by, bq), bc) in &other.terms {
                let key = checked_exps(i64::from(*ay) + i64::from(*by), i64::from(*aq) + i64::from(*bq));
                out.insert_add(key, ac * bc);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return BiLaurent::zero();
        }
        let terms = self.terms.iter().map(|(k, v)| (*k, v * c)).collect();
        BiLaurent { terms }
    }

    /// Multiply by the monomial `y^ey * q^eq` (shifts every exponent pair).
    pub fn mul_monomial(&self, ey: i64, eq: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                (
                    checked_exps(i64::from(*a) + ey, i64::from(*b) + eq),
                    c.clone(),
                )
            })
            .collect();
        BiLaurent { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BiLaurent::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Smallest q-exponent present, or `None` for the zero polynomial.
    pub fn min_q_exp(&self) -> Option<i32> {
        self.terms.keys().map(|(_, eq)| *eq).min()
    }

    /// The value of a constant polynomial, or `None` when any variable
    /// appears.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return Some(c.clone());
            }
        }
        None
    }

    /// True when no negative q-exponents are present.
    pub fn is_polynomial_in_q(&self) -> bool {
        self.min_q_exp().map(|m| m >= 0).unwrap_or(true)
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Exact evaluation at rational `y`, `q`.
    ///
    /// Errors with [`Error::PoleAtZero`] when `q = 0` meets a negative
    /// q-exponent.
    pub fn eval(&self, yv: &BigRational, qv: &BigRational) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for ((ey, eq), c) in &self.terms {
            let ypow = rat_pow(yv, i64::from(*ey))?;
            let qpow = rat_pow(qv, i64::from(*eq))?;
            total += c * ypow * qpow;
        }
        Ok(total)
    }

    /// Substitute a rational value for `q`, keeping `y` symbolic.
    pub fn subst_q(&self, qv: &BigRational) -> Result<Self> {
        let mut out = BiLaurent::zero();
        for ((ey, eq), c) in &self.terms {
            let factor = rat_pow(qv, i64::from(*eq))?;
            out.insert_add((*ey, 0), c * factor);
        }
        Ok(out)
    }

    /// Substitute a rational value for `y`, keeping `q` symbolic.
    pub fn subst_y(&self, yv: &BigRational) -> Self {
        let mut out = BiLaurent::zero();
        for ((ey, eq), c) in &self.terms {
            let factor = rat_pow(yv, i64::from(*ey)).expect("non-negative y exponent");
            out.insert_add((0, *eq), c * factor);
        }
        out
    }

    /// Exact quotient `self / divisor` when it exists in the Laurent ring.
    ///
    /// Since `q` is a unit, both operands are first normalized to
    /// q-valuation zero; the remaining polynomial division eliminates
    /// leading terms under the `(e_y, e_q)` lexicographic order.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(BiLaurent::zero());
        }
        let va = i64::from(self.min_q_exp().unwrap());
        let vb = i64::from(divisor.min_q_exp().unwrap());
        let a = self.mul_monomial(0, -va);
        let b = divisor.mul_monomial(0, -vb);

        let (lt_key, lt_coeff) = b.terms.iter().next_back().map(|(k, c)| (*k, c.clone())).unwrap();
        let mut rem = a;
        let mut quo = BiLaurent::zero();
        while !rem.is_zero() {
            let (rk, rc) = rem.terms.iter().next_back().map(|(k, c)| (*k, c.clone())).unwrap();
            if rk.0 < lt_key.0 || rk.1 < lt_key.1 {
                return Err(Error::NotDivisible);
            }
            let mk = (rk.0 - lt_key.0, rk.1 - lt_key.1);
            let mc = rc / &lt_coeff;
            let m = BiLaurent::monomial(mc, i64::from(mk.0), i64::from(mk.1));
            quo = quo.add_ref(&m);
            rem = rem.sub_ref(&m.mul_ref(&b));
        }
        Ok(quo.mul_monomial(0, va - vb))
    }

    /// Canonical text form. Terms appear in `(e_y asc, e_q asc)` order,
    /// each as `c`, `c*y^a`, `c*q^b` or `c*y^a*q^b` with unit exponents and
    /// zero-exponent factors omitted, joined by ` + ` / ` - `.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((ey, eq), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&mag.to_string());
            if *ey != 0 {
                out.push_str("*y");
                if *ey != 1 {
                    out.push_str(&format!("^{ey}"));
                }
            }
            if *eq != 0 {
                out.push_str("*q");
                if *eq != 1 {
                    out.push_str(&format!("^{eq}"));
                }
            }
        }
        out
    }

    /// JSON form `{"terms":[{"y":..,"q":..,"coeff":"p/r"},...]}` in canonical
    /// term order.
    pub fn to_json(&self) -> String {
        let repr = PolyRepr {
            terms: self
                .terms
                .iter()
                .map(|((ey, eq), c)| TermRepr {
                    y: *ey,
                    q: *eq,
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&repr).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr: PolyRepr =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad polynomial JSON: {e}")))?;
        let mut out = BiLaurent::zero();
        for t in repr.terms {
            let c = BigRational::from_str(&t.coeff)
                .map_err(|e| Error::Parse(format!("bad coefficient {:?}: {e}", t.coeff)))?;
            out.insert_add(checked_exps(i64::from(t.y), i64::from(t.q)), c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    y: i32,
    q: i32,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

/// `base^e` for integer `e`, erroring on `0^negative`.
pub fn rat_pow(base: &BigRational, e: i64) -> Result<BigRational> {
    if e == 0 {
        return Ok(BigRational::one());
    }
    if base.is_zero() {
        if e < 0 {
            return Err(Error::PoleAtZero);
        }
        return Ok(BigRational::zero());
    }
    let mag = e.unsigned_abs() as u32;
    let p = num::pow::pow(base.clone(), mag as usize);
    if e < 0 {
        Ok(p.recip())
    } else {
        Ok(p)
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl Add for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        self.add_ref(rhs)
    }
}

impl Sub for &BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &BiLaurent) -> BiLaurent {
        self.sub_ref(rhs)
    }
}

impl Mul for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        self.mul_ref(rhs)
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn product_difference_of_squares() {
        let one_plus_q = BiLaurent::one().add_ref(&BiLaurent::var_q());
        let one_minus_q = BiLaurent::one().sub_ref(&BiLaurent::var_q());
        let got = one_plus_q.mul_ref(&one_minus_q);
        let want = BiLaurent::one().sub_ref(&BiLaurent::monomial(BigRational::one(), 0, 2));
        assert_eq!(got, want);
    }

    #[test]
    fn laurent_cancellation() {
        // (y * q^-1) * q = y
        let a = BiLaurent::monomial(BigRational::one(), 1, -1);
        let got = a.mul_ref(&BiLaurent::var_q());
        assert_eq!(got, BiLaurent::var_y());
    }

    #[test]
    fn exact_div_basic() {
        // (1 - q^2) / (1 - q) = 1 + q
        let num_ = BiLaurent::one().sub_ref(&BiLaurent::monomial(BigRational::one(), 0, 2));
        let den = BiLaurent::one().sub_ref(&BiLaurent::var_q());
        let got = num_.exact_div(&den).unwrap();
        assert_eq!(got, BiLaurent::one().add_ref(&BiLaurent::var_q()));

        // ((1+q) y^2) / y = (1+q) y
        let a = BiLaurent::one()
            .add_ref(&BiLaurent::var_q())
            .mul_monomial(2, 0);
        let got = a.exact_div(&BiLaurent::var_y()).unwrap();
        assert_eq!(got, BiLaurent::one().add_ref(&BiLaurent::var_q()).mul_monomial(1, 0));
    }

    #[test]
    fn exact_div_failure_cases() {
        // (1 - q^3) / (1 - q^2) has no polynomial quotient
        let a = BiLaurent::one().sub_ref(&BiLaurent::q_pow(3));
        let b = BiLaurent::one().sub_ref(&BiLaurent::q_pow(2));
        assert_eq!(a.exact_div(&b), Err(Error::NotDivisible));
        assert_eq!(a.exact_div(&BiLaurent::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn eval_points() {
        // y + y^2 at y=2 -> 6
        let p = BiLaurent::var_y().add_ref(&BiLaurent::monomial(BigRational::one(), 2, 0));
        let v = p.eval(&rat(2, 1), &rat(1, 1)).unwrap();
        assert_eq!(v, rat(6, 1));
        // q^-1 at q=1/3 -> 3
        let p = BiLaurent::q_pow(-1);
        assert_eq!(p.eval(&rat(1, 1), &rat(1, 3)).unwrap(), rat(3, 1));
        // pole at q=0
        assert_eq!(p.eval(&rat(1, 1), &rat(0, 1)), Err(Error::PoleAtZero));
    }

    #[test]
    fn laurent_residue_detection() {
        assert!(!BiLaurent::q_pow(-1).is_polynomial_in_q());
        assert_eq!(BiLaurent::q_pow(-1).min_q_exp(), Some(-1));
        assert!(BiLaurent::zero().is_polynomial_in_q());
        let mixed = BiLaurent::var_y().add_ref(&BiLaurent::monomial(rat(1, 2), 2, -3));
        assert_eq!(mixed.min_q_exp(), Some(-3));
        assert!(!mixed.has_integer_coeffs());
    }

    #[test]
    fn canonical_form_matches_contract() {
        // 1*y + 3*y^2 + 1*y^2*q + 1*y^3
        let p = BiLaurent::var_y()
            .add_ref(&BiLaurent::monomial(BigRational::from_i64(3).unwrap(), 2, 0))
            .add_ref(&BiLaurent::monomial(BigRational::one(), 2, 1))
            .add_ref(&BiLaurent::monomial(BigRational::one(), 3, 0));
        assert_eq!(p.canonical_string(), "1*y + 3*y^2 + 1*y^2*q + 1*y^3");
        let m = BiLaurent::monomial(rat(-1, 2), 0, -2);
        assert_eq!(m.canonical_string(), "-1/2*q^-2");
        assert_eq!(BiLaurent::zero().canonical_string(), "0");
        let diff = BiLaurent::one().sub_ref(&BiLaurent::var_y());
        assert_eq!(diff.canonical_string(), "1 - 1*y");
    }

    #[test]
    fn json_round_trip() {
        let p = BiLaurent::monomial(rat(-7, 3), 2, -1).add_ref(&BiLaurent::one());
        let s = p.to_json();
        assert_eq!(BiLaurent::from_json(&s).unwrap(), p);
    }
}
