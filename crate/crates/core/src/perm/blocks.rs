//! Block specifications, generalized derangement classes, and the generating
//! polynomials in `y^wex q^cr`.
//!
//! A composition `(n_1, ..., n_k)` splits `[n]` into consecutive segments;
//! `D(n_1, ..., n_k)` is the set of permutations mapping no point into its
//! own segment. Class polynomials are accumulated through a `(wex, cr)`
//! count matrix, so the inner enumeration loop never touches big-integer
//! arithmetic. The search space partitions by first image value, which
//! enables a deterministic parallel map-reduce for the largest cases.

use num::BigRational;

use crate::algebra::BiLaurent;
use crate::error::{Error, Result};

use super::Permutation;

/// Composition `(n_1, ..., n_k)` of positive integers defining consecutive
/// segments of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSpec {
    sizes: Vec<usize>,
    /// block index of each value, `block_idx[v-1]` for `v` in `1..=n`
    block_idx: Vec<usize>,
}

impl BlockSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::Parse("block sizes must be positive".into()));
        }
        let mut block_idx = Vec::with_capacity(sizes.iter().sum());
        for (b, &s) in sizes.iter().enumerate() {
            block_idx.extend(std::iter::repeat_n(b, s));
        }
        Ok(BlockSpec { sizes, block_idx })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn total(&self) -> usize {
        self.block_idx.len()
    }

    /// Block index (0-based) containing the value `v` in `1..=n`.
    pub fn block_of(&self, v: usize) -> usize {
        self.block_idx[v - 1]
    }

    /// True iff no `i` has `i` and `sigma(i)` in the same segment.
    pub fn is_generalized_derangement(&self, sigma: &Permutation) -> Result<bool> {
        if sigma.n() != self.total() {
            return Err(Error::SizeMismatch {
                expected: self.total(),
                got: sigma.n(),
            });
        }
        Ok((1..=sigma.n()).all(|i| self.block_of(i) != self.block_of(sigma.apply(i))))
    }

    /// Visit each member of the class exactly once, in lexicographic order
    /// of image sequences.
    pub fn for_each_in_class<F: FnMut(&[usize])>(&self, mut f: F) {
        let n = self.total();
        let idx = &self.block_idx;
        backtrack(n, |pos, val| idx[pos - 1] != idx[val - 1], &mut f);
    }

    /// Members of the class in lexicographic order. Respects the cap since
    /// the result is materialized.
    pub fn enumerate_class(&self, cap: usize) -> Result<Vec<Permutation>> {
        self.check_cap(cap)?;
        let mut out = Vec::new();
        self.for_each_in_class(|img| {
            out.push(Permutation {
                image: img.to_vec(),
            })
        });
        Ok(out)
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.total() > cap {
            return Err(Error::CapExceeded {
                n: self.total(),
                cap,
            });
        }
        Ok(())
    }

    /// `sum over D(n_1,...,n_k) of y^wex q^cr`.
    pub fn class_polynomial(&self, cap: usize) -> Result<BiLaurent> {
        self.check_cap(cap)?;
        let idx = self.block_idx.clone();
        Ok(weight_sum(self.total(), move |pos, val| {
            idx[pos - 1] != idx[val - 1]
        }))
    }
}

/// `sum over all of S_n of y^wex q^cr`; the empty permutation gives 1.
pub fn permutation_polynomial(n: usize, cap: usize) -> Result<BiLaurent> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(weight_sum(n, |_, _| true))
}

/// Depth-first assignment of images in ascending candidate order, pruning
/// with `allowed(position, value)`.
fn backtrack<A, F>(n: usize, allowed: A, f: &mut F)
where
    A: Fn(usize, usize) -> bool,
    F: FnMut(&[usize]),
{
    let mut used = vec![false; n + 1];
    let mut image = vec![0usize; n];
    fn rec<A, F>(pos: usize, n: usize, used: &mut [bool], image: &mut [usize], allowed: &A, f: &mut F)
    where
        A: Fn(usize, usize) -> bool,
        F: FnMut(&[usize]),
    {
        if pos > n {
            f(image);
            return;
        }
        for val in 1..=n {
            if !used[val] && allowed(pos, val) {
                used[val] = true;
                image[pos - 1] = val;
                rec(pos + 1, n, used, image, allowed, f);
                used[val] = false;
            }
        }
    }
    rec(1, n, &mut used, &mut image, &allowed, f);
}

/// Count matrix indexed by `(wex, cr)`.
type Counts = Vec<Vec<u64>>;

fn empty_counts(n: usize) -> Counts {
    let max_cr = n * n.saturating_sub(1) / 2;
    vec![vec![0u64; max_cr + 1]; n + 1]
}

fn tally(image: &[usize], counts: &mut Counts) {
    let n = image.len();
    let mut wex = 0usize;
    let mut cr = 0usize;
    for i in 1..=n {
        let si = image[i - 1];
        if i <= si {
            wex += 1;
        }
        for j in 1..i {
            let sj = image[j - 1];
            if i <= sj && sj < si {
                cr += 1;
            }
        }
        for j in (i + 1)..=n {
            let sj = image[j - 1];
            if i > sj && sj > si {
                cr += 1;
            }
        }
    }
    counts[wex][cr] += 1;
}

fn counts_to_polynomial(counts: &Counts) -> BiLaurent {
    let mut p = BiLaurent::zero();
    for (w, row) in counts.iter().enumerate() {
        for (c, &m) in row.iter().enumerate() {
            if m != 0 {
                p = p.add_ref(&BiLaurent::monomial(
                    BigRational::from_integer(m.into()),
                    w as i64,
                    c as i64,
                ));
            }
        }
    }
    p
}

/// Threshold above which the first-image partition runs on worker threads.
const PARALLEL_MIN_N: usize = 9;

fn weight_sum<A>(n: usize, allowed: A) -> BiLaurent
where
    A: Fn(usize, usize) -> bool + Sync,
{
    if n == 0 {
        return BiLaurent::one();
    }
    let firsts: Vec<usize> = (1..=n).filter(|&v| allowed(1, v)).collect();
    let threads = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1);
    let counts = if n >= PARALLEL_MIN_N && threads > 1 && firsts.len() > 1 {
        let partials: Vec<Counts> = std::thread::scope(|scope| {
            let handles: Vec<_> = firsts
                .iter()
                .map(|&v| scope.spawn({ let allowed = &allowed; move || partition_counts(n, v, allowed) }))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        merge_counts(n, partials)
    } else {
        let partials: Vec<Counts> = firsts
            .iter()
            .map(|&v| partition_counts(n, v, &allowed))
            .collect();
        merge_counts(n, partials)
    };
    counts_to_polynomial(&counts)
}

/// Counts over the slice of the class with first image fixed to `first`.
fn partition_counts<A>(n: usize, first: usize, allowed: &A) -> Counts
where
    A: Fn(usize, usize) -> bool,
{
    let mut counts = empty_counts(n);
    let mut used = vec![false; n + 1];
    let mut image = vec![0usize; n];
    used[first] = true;
    image[0] = first;
    fn rec<A, F>(pos: usize, n: usize, used: &mut [bool], image: &mut [usize], allowed: &A, f: &mut F)
    where
        A: Fn(usize, usize) -> bool,
        F: FnMut(&[usize]),
    {
        if pos > n {
            f(image);
            return;
        }
        for val in 1..=n {
            if !used[val] && allowed(pos, val) {
                used[val] = true;
                image[pos - 1] = val;
                rec(pos + 1, n, used, image, allowed, f);
                used[val] = false;
            }
        }
    }
    let mut tally_into = |img: &[usize]| tally(img, &mut counts);
    rec(2, n, &mut used, &mut image, allowed, &mut tally_into);
    counts
}

fn merge_counts(n: usize, partials: Vec<Counts>) -> Counts {
    let mut total = empty_counts(n);
    for part in partials {
        for (w, row) in part.into_iter().enumerate() {
            for (c, m) in row.into_iter().enumerate() {
                total[w][c] += m;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn one() -> BigRational {
        BigRational::one()
    }

    #[test]
    fn derangement_membership() {
        let b = BlockSpec::new(vec![1, 1]).unwrap();
        let swap = Permutation::new(vec![2, 1]).unwrap();
        assert!(b.is_generalized_derangement(&swap).unwrap());

        let b3 = BlockSpec::new(vec![1, 1, 1]).unwrap();
        let fixed = Permutation::new(vec![2, 1, 3]).unwrap();
        assert!(!b3.is_generalized_derangement(&fixed).unwrap());

        let b221 = BlockSpec::new(vec![2, 2, 1]).unwrap();
        let member = Permutation::parse("5,4,1,2,3").unwrap();
        assert!(b221.is_generalized_derangement(&member).unwrap());

        assert_eq!(
            b3.is_generalized_derangement(&swap),
            Err(Error::SizeMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn enumerate_smallest_classes() {
        let b = BlockSpec::new(vec![1, 1]).unwrap();
        let members = b.enumerate_class(10).unwrap();
        assert_eq!(members, vec![Permutation::new(vec![2, 1]).unwrap()]);

        // a single block admits no derangement
        let b3 = BlockSpec::new(vec![3]).unwrap();
        assert!(b3.enumerate_class(10).unwrap().is_empty());

        let b221 = BlockSpec::new(vec![2, 2, 1]).unwrap();
        let members = b221.enumerate_class(10).unwrap();
        assert_eq!(members.len(), 16);
        // lexicographic order and count consistency with the polynomial
        let mut sorted = members.clone();
        sorted.sort();
        assert_eq!(members, sorted);
        let count = b221
            .class_polynomial(10)
            .unwrap()
            .eval(&one(), &one())
            .unwrap();
        assert_eq!(count, BigRational::from_integer(16.into()));
    }

    #[test]
    fn cap_is_enforced() {
        let b = BlockSpec::new(vec![6, 6]).unwrap();
        assert_eq!(
            b.class_polynomial(10),
            Err(Error::CapExceeded { n: 12, cap: 10 })
        );
        assert_eq!(
            permutation_polynomial(11, 10),
            Err(Error::CapExceeded { n: 11, cap: 10 })
        );
    }

    #[test]
    fn small_class_polynomials() {
        // D(1,1) = {(2,1)} with weight y
        let b = BlockSpec::new(vec![1, 1]).unwrap();
        assert_eq!(b.class_polynomial(10).unwrap(), BiLaurent::var_y());

        // d_3 = y + q y^2
        let b = BlockSpec::new(vec![1, 1, 1]).unwrap();
        let want = BiLaurent::var_y().add_ref(&BiLaurent::monomial(one(), 2, 1));
        assert_eq!(b.class_polynomial(10).unwrap(), want);
    }

    #[test]
    fn class_polynomial_221_matches_product_form() {
        // (1+q)^3 (1+qy) y^2
        let one_plus_q = BiLaurent::one().add_ref(&BiLaurent::var_q());
        let want = one_plus_q
            .pow(3)
            .mul_ref(&BiLaurent::one().add_ref(&BiLaurent::monomial(one(), 1, 1)))
            .mul_monomial(2, 0);
        let b = BlockSpec::new(vec![2, 2, 1]).unwrap();
        assert_eq!(b.class_polynomial(10).unwrap(), want);
    }

    #[test]
    fn permutation_polynomial_small_values() {
        assert_eq!(permutation_polynomial(0, 10).unwrap(), BiLaurent::one());
        // mu_3 = y + (3+q) y^2 + y^3
        let want = BiLaurent::var_y()
            .add_ref(&BiLaurent::monomial(BigRational::from_integer(3.into()), 2, 0))
            .add_ref(&BiLaurent::monomial(one(), 2, 1))
            .add_ref(&BiLaurent::monomial(one(), 3, 0));
        assert_eq!(permutation_polynomial(3, 10).unwrap(), want);
        // mu_4 = y + (6+4q+q^2) y^2 + (6+4q+q^2) y^3 + y^4
        let mid = BiLaurent::from_i64(6)
            .add_ref(&BiLaurent::from_i64(4).mul_ref(&BiLaurent::var_q()))
            .add_ref(&BiLaurent::q_pow(2));
        let want = BiLaurent::var_y()
            .add_ref(&mid.mul_monomial(2, 0))
            .add_ref(&mid.mul_monomial(3, 0))
            .add_ref(&BiLaurent::monomial(one(), 4, 0));
        assert_eq!(permutation_polynomial(4, 10).unwrap(), want);
    }

    #[test]
    fn counts_specialize_to_factorial_and_derangements() {
        // n! at y=q=1, and derangement numbers via D_n = (n-1)(D_{n-1}+D_{n-2})
        let mut fact = 1u64;
        let (mut d_prev, mut d_cur) = (1u64, 0u64); // D_0, D_1
        for n in 1..=7usize {
            fact *= n as u64;
            let mu = permutation_polynomial(n, 10).unwrap();
            assert_eq!(
                mu.eval(&one(), &one()).unwrap(),
                BigRational::from_integer(fact.into())
            );
            if n >= 2 {
                let d_next = (n as u64 - 1) * (d_cur + d_prev);
                d_prev = d_cur;
                d_cur = d_next;
            }
            let dn = BlockSpec::new(vec![1; n]).unwrap();
            assert_eq!(
                dn.class_polynomial(10).unwrap().eval(&one(), &one()).unwrap(),
                BigRational::from_integer(d_cur.into())
            );
        }
    }

    #[test]
    fn partitioned_enumeration_matches_direct() {
        // the parallel path must agree with a plain fold over the class
        let b = BlockSpec::new(vec![3, 3, 3]).unwrap();
        let poly = b.class_polynomial(10).unwrap();
        let mut direct = BiLaurent::zero();
        b.for_each_in_class(|img| {
            let p = Permutation::new(img.to_vec()).unwrap();
            direct = direct.add_ref(&BiLaurent::monomial(one(), p.wex() as i64, p.cr() as i64));
        });
        assert_eq!(poly, direct);
    }
}
