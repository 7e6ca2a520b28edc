//! Dense polynomials in the main variable `x` with [`BiLaurent`] coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;

use super::bilaurent::BiLaurent;
use crate::error::Result;

/// Polynomial in `x` over the `(y, q)` Laurent ring. Coefficient `i` is the
/// coefficient of `x^i`; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    coeffs: Vec<BiLaurent>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly::constant(BiLaurent::one())
    }

    pub fn var_x() -> Self {
        XPoly {
            coeffs: vec![BiLaurent::zero(), BiLaurent::one()],
        }
    }

    pub fn constant(c: BiLaurent) -> Self {
        let mut p = XPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BiLaurent>) -> Self {
        let mut p = XPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> BiLaurent {
        self.coeffs.get(i).cloned().unwrap_or_else(BiLaurent::zero)
    }

    pub fn coeffs(&self) -> &[BiLaurent] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i).add_ref(&other.coeff(i)))
            .collect();
        XPoly::from_coeffs(coeffs)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i).sub_ref(&other.coeff(i)))
            .collect();
        XPoly::from_coeffs(coeffs)
    }

    pub fn neg_ref(&self) -> Self {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![BiLaurent::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        XPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BiLaurent) -> Self {
        XPoly::from_coeffs(self.coeffs.iter().map(|v| v.mul_ref(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = XPoly::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Exact evaluation at rational `x`, `y`, `q` (Horner in `x`).
    pub fn eval(&self, xv: &BigRational, yv: &BigRational, qv: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::from_integer(0.into());
        for c in self.coeffs.iter().rev() {
            acc = acc * xv + c.eval(yv, qv)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "({c})")?;
            } else if i == 1 {
                write!(f, "({c})*x")?;
            } else {
                write!(f, "({c})*x^{i}")?;
            }
        }
        Ok(())
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        self.add_ref(rhs)
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self.sub_ref(rhs)
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_binomial() {
        // (x - y)^2 = x^2 - 2y x + y^2
        let p = XPoly::var_x().sub_ref(&XPoly::constant(BiLaurent::var_y()));
        let sq = p.pow(2);
        assert_eq!(sq.degree(), Some(2));
        assert_eq!(sq.coeff(2), BiLaurent::one());
        assert_eq!(sq.coeff(1), BiLaurent::from_i64(-2).mul_ref(&BiLaurent::var_y()));
        assert_eq!(sq.coeff(0), BiLaurent::var_y().pow(2));
    }

    #[test]
    fn degree_is_additive() {
        let p = XPoly::var_x().add_ref(&XPoly::one());
        let r = XPoly::var_x().pow(3).sub_ref(&XPoly::constant(BiLaurent::var_q()));
        assert_eq!(
            p.mul_ref(&r).degree(),
            Some(p.degree().unwrap() + r.degree().unwrap())
        );
    }

    #[test]
    fn evaluation_is_multiplicative() {
        use num::BigRational;
        let rat = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let p = XPoly::var_x().sub_ref(&XPoly::constant(BiLaurent::var_y()));
        let r = XPoly::var_x()
            .pow(2)
            .add_ref(&XPoly::constant(BiLaurent::q_pow(-1)));
        let (x, y, q) = (rat(3, 2), rat(-1, 3), rat(2, 5));
        let lhs = p.mul_ref(&r).eval(&x, &y, &q).unwrap();
        let rhs = p.eval(&x, &y, &q).unwrap() * r.eval(&x, &y, &q).unwrap();
        assert_eq!(lhs, rhs);
        // q = 0 against a negative q-power is a pole
        assert!(r.eval(&x, &y, &rat(0, 1)).is_err());
    }
}
