//! Fraction-field-in-q intermediates.
//!
//! Closed sums whose terms carry q-factorial denominators are accumulated as
//! `(numerator, denominator)` pairs with the denominator a polynomial in `q`
//! only, then collapsed with exact division at the end. No gcd reduction is
//! performed; the sums involved stay small.

use super::bilaurent::BiLaurent;
use crate::error::{Error, Result};

/// A quotient `num / den` with `den` a nonzero polynomial in q alone.
#[derive(Debug, Clone)]
pub(crate) struct QFrac {
    num: BiLaurent,
    den: BiLaurent,
}

impl QFrac {
    pub fn zero() -> Self {
        QFrac {
            num: BiLaurent::zero(),
            den: BiLaurent::one(),
        }
    }

    pub fn new(num: BiLaurent, den: BiLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QFrac { num, den })
    }

    pub fn add(&self, other: &Self) -> Self {
        QFrac {
            num: self
                .num
                .mul_ref(&other.den)
                .add_ref(&other.num.mul_ref(&self.den)),
            den: self.den.mul_ref(&other.den),
        }
    }

    pub fn mul_poly(&self, p: &BiLaurent) -> Self {
        QFrac {
            num: self.num.mul_ref(p),
            den: self.den.clone(),
        }
    }

    /// Collapse to a polynomial; errors with [`Error::NotDivisible`] when the
    /// denominator does not divide the numerator exactly.
    pub fn into_polynomial(self) -> Result<BiLaurent> {
        self.num.exact_div(&self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qseries::{q_factorial, q_int};

    #[test]
    fn telescoping_sum_collapses() {
        // [3]_q / 3!_q * 2!_q  + [2]_q^2 / 2!_q * ... exercise add + collapse:
        // 1/(1+q) + q/(1+q) = 1
        let den = q_int(2).unwrap();
        let a = QFrac::new(BiLaurent::one(), den.clone()).unwrap();
        let b = QFrac::new(BiLaurent::var_q(), den).unwrap();
        assert_eq!(a.add(&b).into_polynomial().unwrap(), BiLaurent::one());
    }

    #[test]
    fn inexact_quotient_is_reported() {
        let f = QFrac::new(q_int(3).unwrap(), q_factorial(2).unwrap()).unwrap();
        assert_eq!(f.into_polynomial(), Err(Error::NotDivisible));
    }
}
