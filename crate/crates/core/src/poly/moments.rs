//! Moment sequences by every available route: cached Motzkin tables, the
//! closed double/triple sums, truncated generating functions, and the
//! Stirling-expansion and explicit formulas for the rescaled
//! Al-Salam-Chihara family.

use num::{BigRational, One, Zero};

use crate::algebra::qfrac::QFrac;
use crate::algebra::qseries::{
    q_binomial_at, q_factorial, q_int, q_int_at, q_pochhammer_at, q_power_at,
};
use crate::algebra::{rat_pow, BiLaurent, TruncatedSeries, XPoly};
use crate::error::{Error, Result};

use super::jacobi::{jacobi_for, moments_motzkin, AscParams, JacobiCoefficients};
use super::stirling::stirling_s2_with;

/// Lazily extended cache of the moments `mu_0, mu_1, ...` of one family.
pub struct MomentTable {
    jacobi: JacobiCoefficients,
    mus: Vec<BiLaurent>,
}

impl MomentTable {
    pub fn new(jacobi: JacobiCoefficients) -> Self {
        MomentTable {
            jacobi,
            mus: vec![BiLaurent::one()],
        }
    }

    /// The q-Laguerre moment table (`mu_0 = 1`).
    pub fn laguerre() -> Self {
        MomentTable::new(JacobiCoefficients::laguerre())
    }

    pub fn for_params(params: &AscParams) -> Result<Self> {
        Ok(MomentTable::new(jacobi_for(params)?))
    }

    pub fn len(&self) -> usize {
        self.mus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mus.is_empty()
    }

    /// Extend the cache so that all moments of degree <= `n` are present.
    pub fn ensure(&mut self, n: usize) {
        while self.mus.len() <= n {
            let next = moments_motzkin(self.mus.len(), &self.jacobi);
            self.mus.push(next);
        }
    }

    /// `mu_n`; the table must already cover degree `n`.
    pub fn get(&self, n: usize) -> Result<&BiLaurent> {
        self.mus.get(n).ok_or(Error::TableTooShort {
            needed: n,
            have: self.mus.len(),
        })
    }
}

/// Linear extension of `x^m -> mu_m` applied to a polynomial.
pub fn functional_apply(p: &XPoly, table: &MomentTable) -> Result<BiLaurent> {
    let mut total = BiLaurent::zero();
    for (m, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        total = total.add_ref(&c.mul_ref(table.get(m)?));
    }
    Ok(total)
}

/// Closed q-Laguerre moment
/// `mu_n = sum_{k=1}^n y^k sum_{i=0}^{k-1} (-1)^i [k-i]_q^n q^{k(i-k)}
///         (C(n,i) q^{k-i} + C(n,i-1))`.
///
/// The sum passes through negative q-powers; the result must collapse to a
/// polynomial with nonnegative integer coefficients, otherwise
/// [`Error::NotPolynomial`] is raised.
pub fn moment_closed_laguerre(n: usize) -> Result<BiLaurent> {
    if n == 0 {
        return Ok(BiLaurent::one());
    }
    let n_i = n as i64;
    let mut total = BiLaurent::zero();
    for k in 1..=n_i {
        let mut inner = BiLaurent::zero();
        for i in 0..k {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let weight = binom(n_i, i)
                .mul_monomial(0, k - i)
                .add_ref(&binom(n_i, i - 1));
            let term = q_int(k - i)?
                .pow(n as u32)
                .mul_monomial(0, k * (i - k))
                .mul_ref(&weight)
                .scale(&BigRational::from_integer(sign.into()));
            inner = inner.add_ref(&term);
        }
        total = total.add_ref(&inner.mul_monomial(k, 0));
    }
    if !total.is_polynomial_in_q() {
        return Err(Error::NotPolynomial);
    }
    Ok(total)
}

/// Closed q-Charlier moment, a polynomial in `a` (encoded as the `y`
/// variable) with coefficients Laurent in q:
/// `mu_n = sum_{k=1}^n a^k sum_{l=0}^{k} [k-l]_q^n (-1)^l / (k-l)!_q
///         sum_{j=0}^{l} (1-q)^j / (l-j)!_q q^{C(l-j+1,2) - k(k-l)}
///         (C(n,j) q^{k-l} + C(n,j-1))`.
///
/// Whether the collapsed value is polynomial in q as well is reported by the
/// error: [`Error::NotPolynomial`] fires only if negative q-powers survive.
pub fn moment_closed_charlier(n: usize) -> Result<BiLaurent> {
    if n == 0 {
        return Ok(BiLaurent::one());
    }
    let n_i = n as i64;
    let one_minus_q = BiLaurent::one().sub_ref(&BiLaurent::var_q());
    let mut total = QFrac::zero();
    for k in 1..=n_i {
        for l in 0..=k {
            if l == k {
                continue; // [0]_q^n = 0 for n >= 1
            }
            let sign = if l % 2 == 0 { 1 } else { -1 };
            let lead = q_int(k - l)?
                .pow(n as u32)
                .scale(&BigRational::from_integer(sign.into()))
                .mul_monomial(k, 0);
            for j in 0..=l {
                let weight = binom(n_i, j)
                    .mul_monomial(0, k - l)
                    .add_ref(&binom(n_i, j - 1));
                let c2 = (l - j + 1) * (l - j) / 2;
                let num = lead
                    .mul_ref(&one_minus_q.pow((j) as u32))
                    .mul_monomial(0, c2 - k * (k - l))
                    .mul_ref(&weight);
                let den = q_factorial(k - l)?.mul_ref(&q_factorial(l - j)?);
                total = total.add(&QFrac::new(num, den)?);
            }
        }
    }
    let collapsed = total.into_polynomial()?;
    if !collapsed.is_polynomial_in_q() {
        return Err(Error::NotPolynomial);
    }
    Ok(collapsed)
}

fn binom(n: i64, k: i64) -> BiLaurent {
    if k < 0 || k > n {
        return BiLaurent::zero();
    }
    let mut v = BigRational::one();
    for j in 0..k {
        v = v * BigRational::from_integer((n - j).into())
            / BigRational::from_integer((j + 1).into());
    }
    BiLaurent::constant(v)
}

/// Family selector for [`moment_gf_truncated`].
#[derive(Debug, Clone)]
pub enum GfFamily {
    /// Symbolic `(y, q)`:
    /// `sum_k k!_q (q t y)^k / prod_{i=1}^k (q^i - q^i [i]_q t + [i]_q t y)`.
    Laguerre,
    /// Symbolic `(a, q)` with `a` encoded as the `y` variable:
    /// `sum_k (a q t)^k / prod_{i=1}^k (q^i - q^i [i]_q t + a (1-q) [i]_q t)`.
    Charlier,
    /// Rational parameter point `(y, B, q)`:
    /// `sum_k (B;q)_k q^{-C(k,2)} (1-q)^{-k} y^k t^k /
    ///  prod_{i=1}^k (1 - [i]_q t (1 - q^{-i} y))`.
    AscAt {
        y: BigRational,
        big_b: BigRational,
        q: BigRational,
    },
}

/// Truncated moment generating function; the coefficient of `t^n` equals
/// the family's n-th moment for every `n <= order`. Term `k` has valuation
/// `k` in `t`, so only `k <= order` terms contribute.
pub fn moment_gf_truncated(family: &GfFamily, order: usize) -> Result<TruncatedSeries> {
    let mut total = TruncatedSeries::zero(order);
    for k in 0..=order {
        let term = match family {
            GfFamily::Laguerre => gf_term_laguerre(k, order)?,
            GfFamily::Charlier => gf_term_charlier(k, order)?,
            GfFamily::AscAt { y, big_b, q } => gf_term_asc_at(k, order, y, big_b, q)?,
        };
        total = total.add_ref(&term);
    }
    Ok(total)
}

fn gf_term_laguerre(k: usize, order: usize) -> Result<TruncatedSeries> {
    let k_i = k as i64;
    // k!_q (q y)^k, divided by prod q^i = q^{k(k+1)/2}
    let pref = q_factorial(k_i)?.mul_monomial(k_i, k_i - k_i * (k_i + 1) / 2);
    let mut den = TruncatedSeries::one(order);
    for i in 1..=k_i {
        // 1 - [i]_q t (1 - q^{-i} y)
        let c = q_int(i)?
            .mul_ref(&BiLaurent::one().sub_ref(&BiLaurent::monomial(BigRational::one(), 1, -i)));
        den = den.mul_ref(&TruncatedSeries::from_coeffs(
            order,
            vec![BiLaurent::one(), c.neg_ref()],
        ));
    }
    Ok(den.recip()?.scale(&pref).shift_up(k))
}

fn gf_term_charlier(k: usize, order: usize) -> Result<TruncatedSeries> {
    let k_i = k as i64;
    // (a q)^k / q^{k(k+1)/2}
    let pref = BiLaurent::monomial(BigRational::one(), k_i, k_i - k_i * (k_i + 1) / 2);
    let one_minus_q = BiLaurent::one().sub_ref(&BiLaurent::var_q());
    let mut den = TruncatedSeries::one(order);
    for i in 1..=k_i {
        // 1 - [i]_q t (1 - q^{-i} a (1-q))
        let a_part = BiLaurent::monomial(BigRational::one(), 1, -i).mul_ref(&one_minus_q);
        let c = q_int(i)?.mul_ref(&BiLaurent::one().sub_ref(&a_part));
        den = den.mul_ref(&TruncatedSeries::from_coeffs(
            order,
            vec![BiLaurent::one(), c.neg_ref()],
        ));
    }
    Ok(den.recip()?.scale(&pref).shift_up(k))
}

fn gf_term_asc_at(
    k: usize,
    order: usize,
    y: &BigRational,
    big_b: &BigRational,
    q: &BigRational,
) -> Result<TruncatedSeries> {
    let k_i = k as i64;
    if q.is_one() || q.is_zero() {
        return Err(Error::PoleAtSample);
    }
    let one_minus_q = BigRational::one() - q;
    let pref = q_pochhammer_at(big_b, q, k_i)?
        * q_power_at(q, -(k_i * (k_i - 1) / 2))?
        * rat_pow(&one_minus_q, -k_i)?
        * rat_pow(y, k_i)?;
    let mut den = TruncatedSeries::one(order);
    for i in 1..=k_i {
        let c = q_int_at(i, q)? * (BigRational::one() - rat_pow(q, -i)? * y);
        den = den.mul_ref(&TruncatedSeries::from_coeffs(
            order,
            vec![BiLaurent::one(), BiLaurent::constant(-c)],
        ));
    }
    Ok(den.recip()?.scale(&BiLaurent::constant(pref)).shift_up(k))
}

/// Moment of the rescaled family through the Stirling expansion:
/// `mu_n = sum_{k=1}^n S_q(n,k,y) (B;q)_k q^{-C(k,2)} (1-q)^{-k} y^k`.
///
/// Symbolic parameters go through the fraction field in q and must collapse
/// under exact division; rational points use plain rational arithmetic with
/// `S_q(n,k,y)` from the recurrence evaluated at the point.
pub fn asc_moment_stirling(n: usize, params: &AscParams) -> Result<BiLaurent> {
    if n == 0 {
        return Ok(BiLaurent::one());
    }
    match params {
        AscParams::Symbolic { y, big_b } => {
            let one_minus_q = BiLaurent::one().sub_ref(&BiLaurent::var_q());
            let mut total = QFrac::zero();
            for k in 1..=(n as i64) {
                let poch = crate::algebra::qseries::q_pochhammer(big_b, k)?;
                let num = stirling_s2_with(n, k as usize, y)
                    .mul_ref(&poch)
                    .mul_ref(&y.pow(k as u32))
                    .mul_monomial(0, -(k * (k - 1) / 2));
                let den = one_minus_q.pow(k as u32);
                total = total.add(&QFrac::new(num, den)?);
            }
            total.into_polynomial()
        }
        AscParams::Point { y, big_b, q } => {
            if q.is_one() || q.is_zero() {
                return Err(Error::PoleAtSample);
            }
            let mut total = BigRational::zero();
            for k in 1..=(n as i64) {
                let s = super::stirling::stirling_s2(n, k as usize).eval(y, q)?;
                total += s
                    * q_pochhammer_at(big_b, q, k)?
                    * q_power_at(q, -(k * (k - 1) / 2))?
                    * rat_pow(&(BigRational::one() - q), -k)?
                    * rat_pow(y, k)?;
            }
            Ok(BiLaurent::constant(total))
        }
    }
}

/// Explicit double-sum moment of the rescaled family at a rational point
/// (with `y = 1/alpha^2`, `B = alpha beta`):
/// `mu_n = sum_{k=1}^n sum_{i=1}^k [k i]_q q^{k-i^2} y^i (B;q)_k
///          ([i]_q (1 - q^{-i} y))^n
///          / ((q;q)_k (q^{1-2i} y; q)_i (q^{1+2i}/y; q)_{k-i})`.
pub fn asc_moment_explicit(
    n: usize,
    y: &BigRational,
    big_b: &BigRational,
    q: &BigRational,
) -> Result<BigRational> {
    if n == 0 {
        return Ok(BigRational::one());
    }
    if y.is_zero() || q.is_zero() {
        return Err(Error::PoleAtSample);
    }
    let n_i = n as i64;
    let mut total = BigRational::zero();
    for k in 1..=n_i {
        let poch_b = q_pochhammer_at(big_b, q, k)?;
        let qq_k = q_pochhammer_at(q, q, k)?;
        if qq_k.is_zero() {
            return Err(Error::PoleAtSample);
        }
        for i in 1..=k {
            let p1 = q_pochhammer_at(&(rat_pow(q, 1 - 2 * i)? * y), q, i)?;
            let p2 = q_pochhammer_at(&(rat_pow(q, 1 + 2 * i)? / y), q, k - i)?;
            let den = &qq_k * p1 * p2;
            if den.is_zero() {
                return Err(Error::PoleAtSample);
            }
            let base = q_int_at(i, q)? * (BigRational::one() - rat_pow(q, -i)? * y);
            let num = q_binomial_at(k, i, q)?
                * q_power_at(q, k - i * i)?
                * rat_pow(y, i)?
                * rat_pow(&base, n_i)?
                * &poch_b;
            total += num / den;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::blocks::permutation_polynomial;
    use crate::poly::laguerre::{laguerre_poly, LaguerreMethod};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn closed_laguerre_small_values() {
        assert_eq!(moment_closed_laguerre(1).unwrap(), BiLaurent::var_y());
        let want = BiLaurent::var_y().add_ref(&BiLaurent::var_y().pow(2));
        assert_eq!(moment_closed_laguerre(2).unwrap(), want);
        // against full S_5 enumeration
        assert_eq!(
            moment_closed_laguerre(5).unwrap(),
            permutation_polynomial(5, 10).unwrap()
        );
    }

    #[test]
    fn gf_laguerre_matches_enumeration() {
        let s = moment_gf_truncated(&GfFamily::Laguerre, 5).unwrap();
        for n in 0..=5 {
            assert_eq!(
                s.coeff(n),
                &permutation_polynomial(n, 10).unwrap(),
                "t^{n} coefficient"
            );
        }
    }

    #[test]
    fn charlier_closed_matches_gf() {
        let s = moment_gf_truncated(&GfFamily::Charlier, 6).unwrap();
        assert_eq!(s.coeff(0), &BiLaurent::one());
        for n in 1..=6 {
            assert_eq!(
                &moment_closed_charlier(n).unwrap(),
                s.coeff(n),
                "charlier mu_{n}"
            );
        }
        // mu_1 = a, mu_2 = a + a^2 (a printed as y)
        assert_eq!(moment_closed_charlier(1).unwrap(), BiLaurent::var_y());
        assert_eq!(
            moment_closed_charlier(2).unwrap(),
            BiLaurent::var_y().add_ref(&BiLaurent::var_y().pow(2))
        );
    }

    #[test]
    fn functional_orthogonality_examples() {
        let mut table = MomentTable::laguerre();
        table.ensure(6);
        // L(1) = 1
        assert_eq!(
            functional_apply(&XPoly::one(), &table).unwrap(),
            BiLaurent::one()
        );
        // L(L_1^2) = y
        let l1 = laguerre_poly(1, LaguerreMethod::Recurrence);
        assert_eq!(
            functional_apply(&l1.pow(2), &table).unwrap(),
            BiLaurent::var_y()
        );
        // L(L_1 L_2) = 0
        let l2 = laguerre_poly(2, LaguerreMethod::Recurrence);
        assert!(functional_apply(&l1.mul_ref(&l2), &table)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn table_too_short_is_reported() {
        let table = MomentTable::laguerre();
        let p = XPoly::var_x().pow(3);
        assert!(matches!(
            functional_apply(&p, &table),
            Err(Error::TableTooShort { .. })
        ));
    }

    #[test]
    fn stirling_route_matches_motzkin_symbolically() {
        // B = q (q-Laguerre): both symbolic routes agree
        let params = AscParams::laguerre();
        let jc = jacobi_for(&params).unwrap();
        for n in 0..=6 {
            assert_eq!(
                asc_moment_stirling(n, &params).unwrap(),
                moments_motzkin(n, &jc),
                "laguerre n={n}"
            );
        }
        // B = 0 (q-Charlier): same
        let params = AscParams::charlier();
        let jc = jacobi_for(&params).unwrap();
        for n in 0..=6 {
            assert_eq!(
                asc_moment_stirling(n, &params).unwrap(),
                moments_motzkin(n, &jc),
                "charlier n={n}"
            );
        }
    }

    #[test]
    fn asc_gf_at_laguerre_point_matches_laguerre_gf() {
        // B = q specializes the general prefactor to the Laguerre one,
        // termwise as series coefficients
        let lag = moment_gf_truncated(&GfFamily::Laguerre, 4).unwrap();
        for (y, q) in [(rat(3, 1), rat(1, 2)), (rat(2, 5), rat(5, 3))] {
            let asc = moment_gf_truncated(
                &GfFamily::AscAt {
                    y: y.clone(),
                    big_b: q.clone(),
                    q: q.clone(),
                },
                4,
            )
            .unwrap();
            for n in 0..=4usize {
                assert_eq!(
                    lag.coeff(n).eval(&y, &q).unwrap(),
                    asc.coeff(n).as_constant().unwrap(),
                    "t^{n} at y={y}, q={q}"
                );
            }
        }
    }

    #[test]
    fn all_rational_point_routes_agree() {
        let points = [
            (rat(2, 1), rat(1, 2), rat(1, 3)),
            (rat(1, 2), rat(0, 1), rat(1, 3)),
            (rat(5, 2), rat(2, 1), rat(3, 7)),
        ];
        for (y, b, q) in &points {
            let params = AscParams::at_point(y.clone(), b.clone(), q.clone());
            let jc = jacobi_for(&params).unwrap();
            let gf = moment_gf_truncated(
                &GfFamily::AscAt {
                    y: y.clone(),
                    big_b: b.clone(),
                    q: q.clone(),
                },
                7,
            )
            .unwrap();
            for n in 0..=7usize {
                let motzkin = moments_motzkin(n, &jc).as_constant().unwrap();
                let gf_c = gf.coeff(n).as_constant().unwrap();
                assert_eq!(motzkin, gf_c, "gf at n={n}");
                if n >= 1 {
                    let stirling = asc_moment_stirling(n, &params)
                        .unwrap()
                        .as_constant()
                        .unwrap();
                    let explicit = asc_moment_explicit(n, y, b, q).unwrap();
                    assert_eq!(motzkin, stirling, "stirling at n={n}");
                    assert_eq!(motzkin, explicit, "explicit at n={n}");
                }
            }
        }
    }
}
