//! The rotation bijection `Phi_k` between
//! `^k S_n = { sigma : sigma(i) > k for 1 <= i <= k }` and
//! `S_n^k = { sigma : sigma(n+1-i) < n+1-k for 1 <= i <= k }`,
//! preserving `(wex, cr)`, together with the crossing decomposition used in
//! its proof.
//!
//! Definition, for `sigma` in `^k S_n`:
//!
//!   sigma'(i) = sigma(i+k) - k      if i <= n-k and sigma(i+k) > k
//!   sigma'(i) = sigma(i+k) + n - k  if i <= n-k and sigma(i+k) <= k
//!   sigma'(i) = sigma(i+k-n) - k    if n-k+1 <= i <= n

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Membership in the domain `^k S_n`.
pub fn in_phi_domain(sigma: &Permutation, k: usize) -> bool {
    k >= 1 && k <= sigma.n() && (1..=k).all(|i| sigma.apply(i) > k)
}

/// Membership in the codomain `S_n^k`.
pub fn in_phi_codomain(sigma: &Permutation, k: usize) -> bool {
    let n = sigma.n();
    k >= 1 && k <= n && (1..=k).all(|i| sigma.apply(n + 1 - i) < n + 1 - k)
}

/// Apply `Phi_k`. Errors with [`Error::NotInDomain`] off `^k S_n`.
pub fn phi(sigma: &Permutation, k: usize) -> Result<Permutation> {
    if !in_phi_domain(sigma, k) {
        return Err(Error::NotInDomain);
    }
    let n = sigma.n();
    let mut image = vec![0usize; n];
    for i in 1..=n {
        image[i - 1] = if i <= n - k {
            let v = sigma.apply(i + k);
            if v > k {
                v - k
            } else {
                v + n - k
            }
        } else {
            sigma.apply(i + k - n) - k
        };
    }
    Ok(Permutation::new(image).expect("Phi_k image is a bijection"))
}

/// Invert `Phi_k`. Errors with [`Error::NotInDomain`] off `S_n^k`.
pub fn phi_inverse(sigma_prime: &Permutation, k: usize) -> Result<Permutation> {
    if !in_phi_codomain(sigma_prime, k) {
        return Err(Error::NotInDomain);
    }
    let n = sigma_prime.n();
    let mut image = vec![0usize; n];
    for i in 1..=n {
        let v = sigma_prime.apply(i);
        if i <= n - k {
            image[i + k - 1] = if v <= n - k { v + k } else { v - (n - k) };
        } else {
            image[i + k - n - 1] = v + k;
        }
    }
    Ok(Permutation::new(image).expect("Phi_k preimage is a bijection"))
}

/// The crossing decomposition `(|L_1|, |L_2|, |L_3|, |L_4|)` of a
/// permutation in `^k S_n`:
///
///   L_1 = {(i,j) : k < i < j <= s(i) < s(j)   or  i > j > s(i) > s(j) > k}
///   L_2 = {(i,j) : i < j <= k < s(i) < s(j)   or  i > j > k >= s(i) > s(j)}
///   L_3 = {(i,j) : i <= k < j <= s(i) < s(j)  or  i > j > s(i) > k >= s(j)}
///   L_4 = {(i,j) : s(i) <= k < j < i <= s(j)  or  i <= k < s(j) < s(i) < j}
///
/// `|L_1| + |L_2| + |L_3| = cr(sigma)` and `|L_3| = |L_4|`.
pub fn crossing_decomposition_l(
    sigma: &Permutation,
    k: usize,
) -> Result<(usize, usize, usize, usize)> {
    if !in_phi_domain(sigma, k) {
        return Err(Error::NotInDomain);
    }
    let n = sigma.n();
    let (mut l1, mut l2, mut l3, mut l4) = (0usize, 0usize, 0usize, 0usize);
    for i in 1..=n {
        let si = sigma.apply(i);
        for j in 1..=n {
            let sj = sigma.apply(j);
            if (k < i && i < j && j <= si && si < sj) || (i > j && j > si && si > sj && sj > k) {
                l1 += 1;
            }
            if (i < j && j <= k && k < si && si < sj) || (i > j && j > k && k >= si && si > sj) {
                l2 += 1;
            }
            if (i <= k && k < j && j <= si && si < sj) || (i > j && j > si && si > k && k >= sj) {
                l3 += 1;
            }
            if (si <= k && k < j && j < i && i <= sj) || (i <= k && k < sj && sj < si && si < j) {
                l4 += 1;
            }
        }
    }
    Ok((l1, l2, l3, l4))
}

/// `|A_i(sigma)| = #{ j : j <= i < sigma(j) }`.
pub fn a_set_count(sigma: &Permutation, i: usize) -> usize {
    (1..=i).filter(|&j| sigma.apply(j) > i).count()
}
