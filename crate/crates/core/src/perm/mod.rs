//! Permutations with the weak-excedance and crossing statistics, generalized
//! derangement classes, and their generating polynomials.
//!
//! A permutation sigma of `[n]` is stored by its image sequence and exposed
//! with 1-indexed semantics throughout. The two statistics are
//!
//!   wex(sigma) = #{ i : i <= sigma(i) }
//!   cr(sigma)  = #{ (i,j) : j < i <= sigma(j) < sigma(i) }
//!              + #{ (i,j) : j > i > sigma(j) > sigma(i) }
//!
//! In the arc diagram, wex counts upper arcs plus isolated points and cr
//! counts upper arcs that cross or touch plus lower arcs that strictly cross.

pub mod blocks;

pub use blocks::BlockSpec;

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1, ..., n}` stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Validates that `image` is a bijection of `{1, ..., n}`.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v < 1 || v > n || seen[v] {
                return Err(Error::Parse(format!(
                    "not a permutation of 1..={n}: {image:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `sigma(i)` for 1-indexed `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut inv = vec![0usize; n];
        for i in 1..=n {
            inv[self.apply(i) - 1] = i;
        }
        Permutation { image: inv }
    }

    /// Number of weak excedances `#{ i : i <= sigma(i) }`.
    pub fn wex(&self) -> usize {
        (1..=self.n()).filter(|&i| i <= self.apply(i)).count()
    }

    /// Number of crossings. Upper crossings allow touching (`i = sigma(j)`),
    /// lower crossings are strict.
    pub fn cr(&self) -> usize {
        let n = self.n();
        let mut count = 0usize;
        for i in 1..=n {
            let si = self.apply(i);
            for j in 1..=n {
                let sj = self.apply(j);
                if j < i && i <= sj && sj < si {
                    count += 1;
                }
                if j > i && i > sj && sj > si {
                    count += 1;
                }
            }
        }
        count
    }

    /// Parse from comma-separated images, e.g. `5,4,1,2,3`.
    pub fn parse(s: &str) -> Result<Self> {
        let image = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad image value {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(image)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        f.write_str(&strs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics_on_small_cases() {
        assert_eq!(Permutation::identity(3).wex(), 3);
        assert_eq!(Permutation::identity(5).cr(), 0);
        let t = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(t.wex(), 1);
        // sigma = (2,3,1): the two upper arcs 1->2, 2->3 touch
        let c = Permutation::new(vec![2, 3, 1]).unwrap();
        assert_eq!(c.cr(), 1);
        assert_eq!(c.wex(), 2);
    }

    #[test]
    fn statistics_on_block_example() {
        // member of D(2,2,1) with weight y^2 q^2
        let s = Permutation::parse("5,4,1,2,3").unwrap();
        assert_eq!(s.wex(), 2);
        assert_eq!(s.cr(), 2);
    }

    #[test]
    fn wex_complement() {
        // wex + #{i : sigma(i) < i} = n
        for image in [vec![3, 1, 2], vec![2, 3, 1], vec![1, 2, 3], vec![3, 2, 1]] {
            let p = Permutation::new(image).unwrap();
            let below = (1..=p.n()).filter(|&i| p.apply(i) < i).count();
            assert_eq!(p.wex() + below, p.n());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let p = Permutation::parse("9,3,7,4,6,11,5,8,1,10,2").unwrap();
        assert_eq!(p.inverse().inverse(), p);
        assert_eq!(p.to_string(), "9,3,7,4,6,11,5,8,1,10,2");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!(Permutation::parse("2,x").is_err());
    }
}
