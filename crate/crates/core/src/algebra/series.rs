//! Truncated power series in `t` with [`BiLaurent`] coefficients.
//!
//! Arithmetic is exact modulo `t^(N+1)`; used to expand moment generating
//! functions term by term.

use super::bilaurent::BiLaurent;
use crate::error::{Error, Result};

/// Exact series `c_0 + c_1 t + ... + c_N t^N`, arithmetic mod `t^(N+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BiLaurent>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![BiLaurent::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = BiLaurent::one();
        s
    }

    /// Build from low-order coefficients, zero-padding up to `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<BiLaurent>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, BiLaurent::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &BiLaurent {
        &self.coeffs[n]
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "series order mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add_ref(b))
            .collect();
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "series order mismatch");
        let mut coeffs = vec![BiLaurent::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn scale(&self, c: &BiLaurent) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|v| v.mul_ref(c)).collect(),
        }
    }

    /// Multiply by `t^k`, truncating at the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![BiLaurent::zero(); self.order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > self.order {
                break;
            }
            coeffs[i + k] = c.clone();
        }
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order);
        TruncatedSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Reciprocal of a unit series. The constant term must be invertible in
    /// the coefficient ring, i.e. a single monomial free of `y`.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = invert_monomial(c0)?;
        let mut coeffs = vec![BiLaurent::zero(); self.order + 1];
        coeffs[0] = inv0.clone();
        for m in 1..=self.order {
            let mut acc = BiLaurent::zero();
            for j in 1..=m {
                acc = acc.add_ref(&self.coeffs[j].mul_ref(&coeffs[m - j]));
            }
            coeffs[m] = acc.neg_ref().mul_ref(&inv0);
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }
}

/// Invert a BiLaurent that is a single y-free monomial `c * q^b`.
fn invert_monomial(p: &BiLaurent) -> Result<BiLaurent> {
    if p.num_terms() != 1 {
        return Err(Error::NonUnitReciprocal);
    }
    let ((ey, eq), c) = p.iter().next().unwrap();
    if *ey != 0 {
        return Err(Error::NonUnitReciprocal);
    }
    Ok(BiLaurent::monomial(c.recip(), 0, -i64::from(*eq)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        // 1/(1-t) to order 3 = 1 + t + t^2 + t^3
        let s = TruncatedSeries::from_coeffs(3, vec![BiLaurent::one(), BiLaurent::from_i64(-1)]);
        let r = s.recip().unwrap();
        for n in 0..=3 {
            assert_eq!(r.coeff(n), &BiLaurent::one());
        }
    }

    #[test]
    fn truncating_product() {
        // (1+t)(1-t) to order 2 = 1 - t^2
        let a = TruncatedSeries::from_coeffs(2, vec![BiLaurent::one(), BiLaurent::one()]);
        let b = TruncatedSeries::from_coeffs(2, vec![BiLaurent::one(), BiLaurent::from_i64(-1)]);
        let p = a.mul_ref(&b);
        assert_eq!(p.coeff(0), &BiLaurent::one());
        assert!(p.coeff(1).is_zero());
        assert_eq!(p.coeff(2), &BiLaurent::from_i64(-1));
    }

    #[test]
    fn geometric_series_with_symbolic_ratio() {
        // 1/(1 - y t) = 1 + y t + y^2 t^2 + ...
        let s = TruncatedSeries::from_coeffs(
            4,
            vec![BiLaurent::one(), BiLaurent::var_y().neg_ref()],
        );
        let r = s.recip().unwrap();
        for n in 0..=4 {
            assert_eq!(r.coeff(n), &BiLaurent::var_y().pow(n as u32));
        }
    }

    #[test]
    fn truncation_drops_high_orders() {
        let s = TruncatedSeries::from_coeffs(
            4,
            vec![
                BiLaurent::one(),
                BiLaurent::var_y(),
                BiLaurent::var_q(),
                BiLaurent::one(),
                BiLaurent::one(),
            ],
        );
        let t = s.truncate(2);
        assert_eq!(t.order(), 2);
        assert_eq!(t.coeff(2), &BiLaurent::var_q());
    }

    #[test]
    fn non_unit_reciprocal_is_rejected() {
        let s = TruncatedSeries::from_coeffs(2, vec![BiLaurent::var_y(), BiLaurent::one()]);
        assert_eq!(s.recip().unwrap_err(), Error::NonUnitReciprocal);
        let z = TruncatedSeries::zero(2);
        assert_eq!(z.recip().unwrap_err(), Error::NonUnitReciprocal);
    }
}
