//! The block-transposition bijection `Gamma^(n1,n2)` between
//! `S_n^(n1,n2) = { sigma : (i, sigma(i)) not in [1,n1]^2 u [n1+1,N2]^2 }`
//! and `S_n^(n2,n1)` (`N2 = n1 + n2`), preserving `(wex, cr)`, with the
//! five-set crossing decomposition and the closed count for the fifth set.
//!
//! Construction of `sigma' = Gamma^(n1,n2)(sigma)`:
//!
//! 1. `sigma'(i) = sigma(i)` whenever `i > N2` and `sigma(i) > N2`.
//!
//! 2. Upward arcs inside `[1, N2]`, written
//!    `{(i, sigma(i)) : i < sigma(i) <= N2} = {(i_s, N2+1-j_s)}` with the
//!    `i_s` ascending, map to `sigma'(j_s) = N2+1-i_s`; downward arcs
//!    `{(sigma(i), i) : sigma(i) < i <= N2} = {(k_t, N2+1-l_t)}` with the
//!    `k_t` ascending map to `sigma'(N2+1-k_t) = l_t`.
//!
//! 3. With `C = {i <= N2 : sigma(i) > N2}`, `D = {i <= N2 :
//!    sigma^{-1}(i) > N2}`, `sigma(C) = {r_1 < ...}`, `sigma^{-1}(D) =
//!    {s_1 < ...}`, and the matching permutations `alpha`, `beta` defined by
//!    `sigma(c_i) = r_{alpha(i)}`, `sigma^{-1}(d_i) = s_{beta(i)}`, the
//!    unused positions `E = [1,N2] \ ({j_s} u {N2+1-k_t})` and values
//!    `F = [1,N2] \ ({N2+1-i_s} u {l_t})` (both ascending) receive
//!    `sigma'(e_i) = r_{alpha(i)}` and `sigma'(s_i) = f_{beta(i)}`.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Membership in `S_n^(n1,n2)`.
pub fn in_gamma_domain(sigma: &Permutation, n1: usize, n2: usize) -> bool {
    let n = sigma.n();
    let big_n2 = n1 + n2;
    if n1 < 1 || n2 < 1 || big_n2 > n {
        return false;
    }
    (1..=n).all(|i| {
        let si = sigma.apply(i);
        !(i <= n1 && si <= n1) && !(n1 < i && i <= big_n2 && n1 < si && si <= big_n2)
    })
}

/// Apply `Gamma^(n1,n2)`. Errors with [`Error::NotInDomain`] off
/// `S_n^(n1,n2)`.
pub fn gamma(sigma: &Permutation, n1: usize, n2: usize) -> Result<Permutation> {
    if !in_gamma_domain(sigma, n1, n2) {
        return Err(Error::NotInDomain);
    }
    let n = sigma.n();
    let big_n2 = n1 + n2;
    let inv = sigma.inverse();
    let mut image = vec![0usize; n];

    // step 1: arcs entirely above N2 are fixed
    for i in (big_n2 + 1)..=n {
        if sigma.apply(i) > big_n2 {
            image[i - 1] = sigma.apply(i);
        }
    }

    // step 2: reflect the arcs inside [1, N2]
    let mut up: Vec<(usize, usize)> = (1..=big_n2)
        .filter(|&i| i < sigma.apply(i) && sigma.apply(i) <= big_n2)
        .map(|i| (i, sigma.apply(i)))
        .collect();
    up.sort();
    let mut down: Vec<(usize, usize)> = (1..=big_n2)
        .filter(|&i| sigma.apply(i) < i && i <= big_n2)
        .map(|i| (sigma.apply(i), i))
        .collect();
    down.sort();
    let i_s: Vec<usize> = up.iter().map(|&(i, _)| i).collect();
    let j_s: Vec<usize> = up.iter().map(|&(_, v)| big_n2 + 1 - v).collect();
    let k_t: Vec<usize> = down.iter().map(|&(k, _)| k).collect();
    let l_t: Vec<usize> = down.iter().map(|&(_, v)| big_n2 + 1 - v).collect();
    for (s, &j) in j_s.iter().enumerate() {
        image[j - 1] = big_n2 + 1 - i_s[s];
    }
    for (t, &k) in k_t.iter().enumerate() {
        image[big_n2 - k] = l_t[t]; // position N2+1-k_t
    }

    // step 3: re-match the block-leaving and block-entering arcs
    let c: Vec<usize> = (1..=big_n2).filter(|&i| sigma.apply(i) > big_n2).collect();
    let d: Vec<usize> = (1..=big_n2).filter(|&i| inv.apply(i) > big_n2).collect();
    let mut r: Vec<usize> = c.iter().map(|&i| sigma.apply(i)).collect();
    r.sort_unstable();
    let mut s_vals: Vec<usize> = d.iter().map(|&i| inv.apply(i)).collect();
    s_vals.sort_unstable();
    // alpha(i), beta(i) as 0-based ranks
    let alpha: Vec<usize> = c
        .iter()
        .map(|&ci| r.binary_search(&sigma.apply(ci)).unwrap())
        .collect();
    let beta: Vec<usize> = d
        .iter()
        .map(|&di| s_vals.binary_search(&inv.apply(di)).unwrap())
        .collect();

    let mut taken_pos = vec![false; big_n2 + 1];
    for &j in &j_s {
        taken_pos[j] = true;
    }
    for &k in &k_t {
        taken_pos[big_n2 + 1 - k] = true;
    }
    let e: Vec<usize> = (1..=big_n2).filter(|&p| !taken_pos[p]).collect();

    let mut taken_val = vec![false; big_n2 + 1];
    for &i in &i_s {
        taken_val[big_n2 + 1 - i] = true;
    }
    for &l in &l_t {
        taken_val[l] = true;
    }
    let f: Vec<usize> = (1..=big_n2).filter(|&v| !taken_val[v]).collect();

    for (idx, &ei) in e.iter().enumerate() {
        image[ei - 1] = r[alpha[idx]];
    }
    for (idx, &si) in s_vals.iter().enumerate() {
        image[si - 1] = f[beta[idx]];
    }

    Ok(Permutation::new(image).expect("Gamma image is a bijection"))
}

/// The crossing decomposition `(|G_1|, ..., |G_5|)` of a permutation in
/// `S_n^(n1,n2)`:
///
///   G_1 = {(i,j) : N2 < i < j <= g(i) < g(j)   or  i > j > g(i) > g(j) > N2}
///   G_2 = {(i,j) : i < j < g(i) < g(j) <= N2   or  N2 >= i > j > g(i) > g(j)}
///   G_3 = {(i,j) : i < j <= N2 < g(i) < g(j)   or  i > j > N2 >= g(i) > g(j)}
///   G_4 = {(i,j) : i <= N2 < j <= g(i) < g(j)  or  i > j > g(i) > N2 >= g(j)}
///   G_5 = {(i,j) : i < j <= g(i) <= N2 < g(j)  or  i > N2 >= j > g(i) > g(j)}
///
/// The five counts sum to `cr`.
pub fn crossing_decomposition_g(
    sigma: &Permutation,
    n1: usize,
    n2: usize,
) -> Result<[usize; 5]> {
    if !in_gamma_domain(sigma, n1, n2) {
        return Err(Error::NotInDomain);
    }
    let n = sigma.n();
    let m = n1 + n2;
    let mut g = [0usize; 5];
    for i in 1..=n {
        let si = sigma.apply(i);
        for j in 1..=n {
            let sj = sigma.apply(j);
            if (m < i && i < j && j <= si && si < sj) || (i > j && j > si && si > sj && sj > m) {
                g[0] += 1;
            }
            if (i < j && j < si && si < sj && sj <= m) || (m >= i && i > j && j > si && si > sj) {
                g[1] += 1;
            }
            if (i < j && j <= m && m < si && si < sj) || (i > j && j > m && m >= si && si > sj) {
                g[2] += 1;
            }
            if (i <= m && m < j && j <= si && si < sj) || (i > j && j > si && si > m && m >= sj) {
                g[3] += 1;
            }
            if (i < j && j <= si && si <= m && m < sj) || (i > m && m >= j && j > si && si > sj) {
                g[4] += 1;
            }
        }
    }
    Ok(g)
}

/// Closed count for the fifth set: with
/// `B(g) = {(i, g(i)) : i < g(i) <= N2} = {(i_1,j_1), ...}` and
/// `B(g^{-1}) = {(g(i), i) : g(i) < i <= N2} = {(k_1,l_1), ...}`
/// (first components ascending),
///
///   `|G_5| = sum_r (j_r - i_r) + sum_r (l_r - k_r - 1) - C(p+q, 2)`.
pub fn g5_closed(sigma: &Permutation, n1: usize, n2: usize) -> Result<usize> {
    if !in_gamma_domain(sigma, n1, n2) {
        return Err(Error::NotInDomain);
    }
    let m = n1 + n2;
    let mut total: i64 = 0;
    let mut p: i64 = 0;
    let mut q: i64 = 0;
    for i in 1..=m {
        let si = sigma.apply(i);
        if i < si && si <= m {
            total += si as i64 - i as i64;
            p += 1;
        }
        if si < i {
            total += i as i64 - si as i64 - 1;
            q += 1;
        }
    }
    let pq = p + q;
    total -= pq * (pq - 1) / 2;
    usize::try_from(total).map_err(|_| Error::NotInDomain)
}
