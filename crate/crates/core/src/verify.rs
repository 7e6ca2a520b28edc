//! Named verification suites behind `verify` in the CLI and the acceptance
//! tests. Every check re-derives both sides of an identity and compares
//! exactly; randomized checks draw their points from a seeded sampler and
//! record the seed in the check detail.

use num::{BigInt, BigRational, One, Zero};

use crate::algebra::qseries::{q_factorial, q_int};
use crate::algebra::BiLaurent;
use crate::bijection::{
    a_set_count, crossing_decomposition_g, crossing_decomposition_l, g5_closed, gamma,
    in_gamma_domain, in_phi_codomain, in_phi_domain, phi, phi_inverse,
};
use crate::error::Error;
use crate::perm::blocks::permutation_polynomial;
use crate::perm::{BlockSpec, Permutation};
use crate::poly::{
    asc_hypergeometric, asc_linearize_c, asc_moment_explicit, asc_moment_stirling, asc_q_poly,
    functional_apply, jacobi_for, laguerre_poly, linearize_closed3, linearize_functional,
    moment_closed_charlier, moment_closed_laguerre, moment_gf_truncated, moments_motzkin,
    partial_fraction_identity_holds, stirling_s1, stirling_s2, stirling_s2_closed_at, AscParams,
    CMethod, GfFamily, HyperForm, JacobiCoefficients, LaguerreMethod, MomentTable,
};
use crate::poly::asc::{c_basis, rat_poly_eval};
use crate::sampling::RationalSampler;

/// Outcome of one named check. Identity checks carry the two compared
/// sides in canonical text form for golden-file export.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub sides: Option<(String, String)>,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.into(),
        pass,
        detail: detail.into(),
        sides: None,
    }
}

fn check_sides(
    name: impl Into<String>,
    pass: bool,
    detail: impl Into<String>,
    lhs: impl Into<String>,
    rhs: impl Into<String>,
) -> CheckResult {
    CheckResult {
        name: name.into(),
        pass,
        detail: detail.into(),
        sides: Some((lhs.into(), rhs.into())),
    }
}

/// Golden-file rows `case,lhs,rhs,equal` for the checks that carry sides.
pub fn golden_rows(results: &[CheckResult]) -> String {
    let mut out = String::from("case,lhs,rhs,equal\n");
    for r in results {
        if let Some((lhs, rhs)) = &r.sides {
            out.push_str(&format!(
                "\"{}\",\"{}\",\"{}\",{}\n",
                r.name,
                lhs.replace('"', "'"),
                rhs.replace('"', "'"),
                lhs == rhs
            ));
        }
    }
    out
}

/// Shared configuration for the suites.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Exhaustive-enumeration cap (largest full `S_n` swept).
    pub cap: usize,
    /// Seed for every randomized rational-point check.
    pub seed: u64,
    /// Number of rational sample points per randomized check family.
    pub samples: usize,
    /// Override of the per-suite symbolic depth (defaults differ by suite).
    pub max_n: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            cap: 10,
            seed: 42,
            samples: 20,
            max_n: None,
        }
    }
}

/// The named suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Moments,
    Stirling,
    Linearization,
    Asc,
    Bijections,
    Classical,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "all" => Ok(Suite::All),
            "moments" => Ok(Suite::Moments),
            "stirling" => Ok(Suite::Stirling),
            "linearization" => Ok(Suite::Linearization),
            "asc" => Ok(Suite::Asc),
            "bijections" => Ok(Suite::Bijections),
            "classical" => Ok(Suite::Classical),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

/// Run a suite; results come back sorted by check name, independent of
/// execution order.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Vec<CheckResult> {
    let mut results = match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Moments,
                Suite::Stirling,
                Suite::Linearization,
                Suite::Asc,
                Suite::Bijections,
                Suite::Classical,
            ] {
                all.extend(run_suite(s, config));
            }
            all
        }
        Suite::Moments => moments_suite(config),
        Suite::Stirling => stirling_suite(config),
        Suite::Linearization => linearization_suite(config),
        Suite::Asc => asc_suite(config),
        Suite::Bijections => bijections_suite(config),
        Suite::Classical => classical_suite(config),
    };
    results.sort_by(|a, b| a.name.cmp(&b.name));
    results
}

// ---------------------------------------------------------------- helpers

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            let mut c = vec![first];
            c.append(&mut rest);
            out.push(c);
        }
    }
    out
}

fn blocks_name(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `I(sizes)` by enumeration, with zero-size blocks dropped (`L_0 = 1`).
fn lin_enum(sizes: &[usize], cap: usize) -> BiLaurent {
    let positive: Vec<usize> = sizes.iter().copied().filter(|&s| s > 0).collect();
    if positive.is_empty() {
        return BiLaurent::one();
    }
    BlockSpec::new(positive)
        .unwrap()
        .class_polynomial(cap)
        .expect("within cap")
}

fn for_each_permutation<F: FnMut(&Permutation)>(n: usize, mut f: F) {
    let mut image: Vec<usize> = (1..=n).collect();
    permute_rec(&mut image, 0, &mut f);
}

fn permute_rec<F: FnMut(&Permutation)>(image: &mut Vec<usize>, at: usize, f: &mut F) {
    if at == image.len() {
        f(&Permutation::new(image.clone()).unwrap());
        return;
    }
    for swap in at..image.len() {
        image.swap(at, swap);
        permute_rec(image, at + 1, f);
        image.swap(at, swap);
    }
}

fn rational_binomial(n: i64, k: i64) -> BigRational {
    if k < 0 || k > n {
        return BigRational::zero();
    }
    let mut v = BigRational::one();
    for j in 0..k {
        v = v * BigRational::from_integer((n - j).into())
            / BigRational::from_integer((j + 1).into());
    }
    v
}

// ---------------------------------------------------------------- moments

fn moments_suite(config: &VerifyConfig) -> Vec<CheckResult> {
    let max_n = config.max_n.unwrap_or(8).min(config.cap);
    let mut out = Vec::new();

    let jc = JacobiCoefficients::laguerre();
    let gf = moment_gf_truncated(&GfFamily::Laguerre, max_n).expect("laguerre gf");
    for n in 0..=max_n {
        let enumerated = permutation_polynomial(n, config.cap).expect("within cap");
        let motzkin = moments_motzkin(n, &jc);
        let closed = moment_closed_laguerre(n);
        let gf_c = gf.coeff(n);
        let pass = closed
            .as_ref()
            .map(|c| enumerated == motzkin && &enumerated == c && &enumerated == gf_c)
            .unwrap_or(false);
        out.push(check_sides(
            format!("moment-routes n={n:02}"),
            pass,
            if pass {
                format!("enumeration = motzkin = closed = gf ({} terms)", enumerated.num_terms())
            } else {
                format!("mismatch: enum={enumerated} motzkin={motzkin} closed={closed:?} gf={gf_c}")
            },
            enumerated.canonical_string(),
            closed
                .map(|c| c.canonical_string())
                .unwrap_or_else(|e| format!("<{e}>")),
        ));
    }
    for n in (max_n + 1)..=config.cap {
        let enumerated = permutation_polynomial(n, config.cap).expect("within cap");
        let motzkin = moments_motzkin(n, &jc);
        let pass = enumerated == motzkin;
        out.push(check_sides(
            format!("moment-routes-large n={n:02}"),
            pass,
            if pass {
                format!("enumeration of S_{n} matches motzkin")
            } else {
                "enumeration differs from motzkin".to_string()
            },
            enumerated.canonical_string(),
            motzkin.canonical_string(),
        ));
    }

    // binomial convolution against derangement polynomials
    for n in 0..=max_n {
        let mu = moments_motzkin(n, &jc);
        let mut conv = BiLaurent::zero();
        for k in 0..=n {
            let d = lin_enum(&vec![1; n - k], config.cap);
            let b = BiLaurent::constant(rational_binomial(n as i64, k as i64));
            conv = conv.add_ref(&b.mul_ref(&d).mul_monomial(k as i64, 0));
        }
        let pass = mu == conv;
        out.push(check_sides(
            format!("moment-convolution n={n:02}"),
            pass,
            if pass {
                "mu_n = sum_k C(n,k) y^k d_{n-k}".to_string()
            } else {
                format!("mismatch: mu={mu} conv={conv}")
            },
            mu.canonical_string(),
            conv.canonical_string(),
        ));
    }

    // q-Charlier closed formula against its generating function
    let gf_c = moment_gf_truncated(&GfFamily::Charlier, 6).expect("charlier gf");
    for n in 1..=6usize {
        let closed = moment_closed_charlier(n);
        let pass = closed.as_ref().map(|c| c == gf_c.coeff(n)).unwrap_or(false);
        let detail = match &closed {
            Ok(c) => format!(
                "closed = gf; polynomial in q: {}",
                if c.is_polynomial_in_q() { "yes" } else { "no" }
            ),
            Err(e) => format!("closed formula failed: {e}"),
        };
        out.push(check_sides(
            format!("moment-charlier n={n:02}"),
            pass,
            detail,
            closed
                .map(|c| c.canonical_string())
                .unwrap_or_else(|e| format!("<{e}>")),
            gf_c.coeff(n).canonical_string(),
        ));
    }

    // observed y-palindromicity (reported as an observation, not asserted theory)
    for n in 1..=max_n {
        let mu = moments_motzkin(n, &jc);
        let pass = mu
            .iter()
            .all(|(&(ey, eq), c)| mu.coeff((n as i32) + 1 - ey, eq) == *c);
        out.push(check(
            format!("observation-moment-palindromic n={n:02}"),
            pass,
            "observation only: coefficient of y^j equals coefficient of y^(n+1-j)",
        ));
    }

    out
}

// ---------------------------------------------------------------- stirling

fn stirling_suite(config: &VerifyConfig) -> Vec<CheckResult> {
    let max_n = config.max_n.unwrap_or(8);
    let mut out = Vec::new();

    for n in 1..=max_n {
        let mut ok = true;
        for k in 1..=n {
            let mut forward = BiLaurent::zero();
            let mut backward = BiLaurent::zero();
            for j in k..=n {
                forward = forward.add_ref(&stirling_s2(n, j).mul_ref(&stirling_s1(j, k)));
                backward = backward.add_ref(&stirling_s1(n, j).mul_ref(&stirling_s2(j, k)));
            }
            let want = if n == k {
                BiLaurent::one()
            } else {
                BiLaurent::zero()
            };
            ok &= forward == want && backward == want;
        }
        out.push(check(
            format!("stirling-inversion n={n:02}"),
            ok,
            "S and s are inverse matrices (both products)",
        ));
    }

    // q = 1 specialization: S_q(n,k,y)|_{q=1} = S(n,k) (1-y)^(n-k)
    let one = BigRational::one();
    let mut classical = vec![vec![BigRational::zero(); max_n + 1]; max_n + 1];
    classical[0][0] = BigRational::one();
    for n in 1..=max_n {
        for k in 1..=n {
            let c = classical[n - 1][k - 1].clone()
                + BigRational::from_integer((k as i64).into()) * &classical[n - 1][k];
            classical[n][k] = c;
        }
    }
    for n in 1..=max_n {
        let mut ok = true;
        for k in 1..=n {
            let lhs = stirling_s2(n, k).subst_q(&one).expect("q=1 is regular");
            let rhs = BiLaurent::one()
                .sub_ref(&BiLaurent::var_y())
                .pow((n - k) as u32)
                .scale(&classical[n][k]);
            ok &= lhs == rhs;
        }
        out.push(check(
            format!("stirling-specialize-q1 n={n:02}"),
            ok,
            "q=1 gives classical Stirling times (1-y)^(n-k)",
        ));
    }

    // y = 0 specialization: the classical q-Stirling recurrence
    for n in 1..=max_n {
        let mut ok = true;
        let mut rows: Vec<Vec<BiLaurent>> = vec![vec![BiLaurent::one()]];
        for np in 1..=n {
            let prev = &rows[np - 1];
            let mut row = vec![BiLaurent::zero(); np + 1];
            for k in 1..=np {
                let lower = prev.get(k - 1).cloned().unwrap_or_else(BiLaurent::zero);
                let same = prev.get(k).cloned().unwrap_or_else(BiLaurent::zero);
                row[k] = lower.add_ref(&q_int(k as i64).unwrap().mul_ref(&same));
            }
            rows.push(row);
        }
        for k in 1..=n {
            ok &= stirling_s2(n, k).subst_y(&BigRational::zero()) == rows[n][k];
        }
        out.push(check(
            format!("stirling-specialize-y0 n={n:02}"),
            ok,
            "y=0 gives the classical q-Stirling numbers",
        ));
    }

    // closed form against the recurrence at seeded rational points
    let mut sampler = RationalSampler::new(config.seed);
    for i in 0..config.samples {
        let mut last_pair = (String::new(), String::new());
        let result = sampler.with_resampling(|s| {
            let y = s.sample_where(|v| !v.is_zero())?;
            let q = s.sample_q();
            for n in 1..=max_n.min(6) {
                for k in 1..=n {
                    let rec = stirling_s2(n, k).eval(&y, &q)?;
                    let clo = stirling_s2_closed_at(n, k, &y, &q)?;
                    last_pair = (rec.to_string(), clo.to_string());
                    if rec != clo {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        });
        let (pass, detail) = match result {
            Ok(true) => (true, format!("closed = recurrence (seed {})", config.seed)),
            Ok(false) => (false, "closed form disagrees with recurrence".into()),
            Err(e) => (false, format!("sampling failed: {e}")),
        };
        out.push(check_sides(
            format!("stirling-closed sample={i:02}"),
            pass,
            detail,
            last_pair.0,
            last_pair.1,
        ));
    }

    // partial fraction identity, cleared of denominators, at k+2 points
    let mut sampler = RationalSampler::new(config.seed.wrapping_add(1));
    for k in 0..=5usize {
        let result = sampler.with_resampling(|s| {
            let y = s.sample_where(|v| !v.is_zero())?;
            let q = s.sample_q();
            let ts: Vec<BigRational> = (1..=(k as i64 + 2))
                .map(|v| BigRational::from_integer(v.into()))
                .collect();
            partial_fraction_identity_holds(k, &y, &q, &ts)
        });
        let (pass, detail) = match result {
            Ok(true) => (true, format!("identity holds at {} points", k + 2)),
            Ok(false) => (false, "identity fails".into()),
            Err(e) => (false, format!("sampling failed: {e}")),
        };
        out.push(check(format!("stirling-partialfraction k={k}"), pass, detail));
    }

    out
}

// ----------------------------------------------------------- linearization

fn linearization_suite(config: &VerifyConfig) -> Vec<CheckResult> {
    let max_n = config.max_n.unwrap_or(8).min(config.cap);
    let mut out = Vec::new();

    let mut table = MomentTable::laguerre();
    table.ensure(max_n.max(10)); // orthogonality below needs degree 10

    for n in 1..=max_n {
        for sizes in compositions(n) {
            let b = BlockSpec::new(sizes.clone()).unwrap();
            let enumerated = b.class_polynomial(config.cap).expect("within cap");
            let functional = linearize_functional(&b, &table).expect("table covers degree");
            let mut pass = enumerated == functional && functional.has_integer_coeffs();
            let mut routes = "enumeration = functional".to_string();
            if sizes.len() == 3 {
                let closed = linearize_closed3(sizes[0], sizes[1], sizes[2]);
                pass &= closed
                    .as_ref()
                    .map(|c| c == &enumerated && c.has_integer_coeffs())
                    .unwrap_or(false);
                routes.push_str(" = closed3");
            }
            out.push(check_sides(
                format!("linearization n={n:02} blocks={}", blocks_name(&sizes)),
                pass,
                if pass { routes } else { "routes disagree".into() },
                enumerated.canonical_string(),
                functional.canonical_string(),
            ));
        }
    }

    // orthogonality: L(L_{n1} L_{n2}) = y^{n1} (n1!_q)^2 delta
    for n1 in 0..=5usize {
        for n2 in 0..=5usize {
            let p = laguerre_poly(n1, LaguerreMethod::Recurrence)
                .mul_ref(&laguerre_poly(n2, LaguerreMethod::Recurrence));
            let got = functional_apply(&p, &table).expect("table covers degree");
            let want = if n1 == n2 {
                q_factorial(n1 as i64)
                    .unwrap()
                    .pow(2)
                    .mul_monomial(n1 as i64, 0)
            } else {
                BiLaurent::zero()
            };
            out.push(check_sides(
                format!("orthogonality n1={n1},n2={n2}"),
                got == want,
                if n1 == n2 {
                    "diagonal value y^n (n!_q)^2"
                } else {
                    "off-diagonal vanishes"
                },
                got.canonical_string(),
                want.canonical_string(),
            ));
        }
    }

    // the three-term recurrence for I with a leading singleton block; the
    // largest class touched has 1 + n + rest_total <= cap points
    let yq_plus_1 = BiLaurent::monomial(BigRational::one(), 1, 1).add_ref(&BiLaurent::one());
    let max_rest = max_n.saturating_sub(4).min(4);
    for n in 1..=3usize {
        for rest_total in 0..=max_rest {
            for rest in compositions(rest_total) {
                let mut with_one = vec![1, n];
                with_one.extend(&rest);
                let lhs = lin_enum(&with_one, config.cap);

                let mut top = vec![n + 1];
                top.extend(&rest);
                let mut mid = vec![n];
                mid.extend(&rest);
                let mut low = vec![n - 1];
                low.extend(&rest);
                let qn = q_int(n as i64).unwrap();
                let rhs = lin_enum(&top, config.cap)
                    .add_ref(&yq_plus_1.mul_ref(&qn).mul_ref(&lin_enum(&mid, config.cap)))
                    .add_ref(
                        &BiLaurent::var_y()
                            .mul_ref(&qn.pow(2))
                            .mul_ref(&lin_enum(&low, config.cap)),
                    );
                out.push(check_sides(
                    format!(
                        "linearization-recurrence n={n} rest={}",
                        if rest.is_empty() {
                            "-".to_string()
                        } else {
                            blocks_name(&rest)
                        }
                    ),
                    lhs == rhs,
                    "I(1,n,rest) = I(n+1,rest) + (yq+1)[n] I(n,rest) + y[n]^2 I(n-1,rest)",
                    lhs.canonical_string(),
                    rhs.canonical_string(),
                ));
            }
        }
    }

    // invariance of the class polynomial under reordering of block sizes
    for n in 2..=max_n {
        for partition in partitions(n) {
            let orderings = unique_orderings(&partition);
            if orderings.len() < 2 {
                continue;
            }
            let base = BlockSpec::new(orderings[0].clone())
                .unwrap()
                .class_polynomial(config.cap)
                .expect("within cap");
            let pass = orderings.iter().skip(1).all(|o| {
                BlockSpec::new(o.clone())
                    .unwrap()
                    .class_polynomial(config.cap)
                    .expect("within cap")
                    == base
            });
            out.push(check(
                format!(
                    "linearization-rearrangement n={n:02} partition={}",
                    blocks_name(&partition)
                ),
                pass,
                format!("{} orderings agree", orderings.len()),
            ));
        }
    }

    out
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in rec(n - first, first) {
                let mut p = vec![first];
                p.append(&mut rest);
                out.push(p);
            }
        }
        out
    }
    rec(n, n)
}

fn unique_orderings(multiset: &[usize]) -> Vec<Vec<usize>> {
    let mut items = multiset.to_vec();
    items.sort_unstable();
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; items.len()];
    fn rec(
        items: &[usize],
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == items.len() {
            out.push(current.clone());
            return;
        }
        let mut last: Option<usize> = None;
        for i in 0..items.len() {
            if used[i] || last == Some(items[i]) {
                continue;
            }
            last = Some(items[i]);
            used[i] = true;
            current.push(items[i]);
            rec(items, used, current, out);
            current.pop();
            used[i] = false;
        }
    }
    rec(&items, &mut used, &mut current, &mut out);
    out
}

// --------------------------------------------------------------------- asc

fn asc_suite(config: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();

    // symbolic reductions of the general Jacobi coefficients
    {
        let jc = jacobi_for(&AscParams::laguerre()).expect("laguerre divides");
        let named = JacobiCoefficients::laguerre();
        let mut ok = true;
        for n in 0..=8 {
            ok &= jc.b(n) == named.b(n) && jc.lam(n) == named.lam(n);
        }
        out.push(check(
            "asc-jacobi-laguerre-reduction",
            ok,
            "general (y,B) coefficients reduce to y[n+1]+[n] and y[n]^2 at B=q",
        ));
        let jc = jacobi_for(&AscParams::charlier()).expect("charlier divides");
        let mut ok = true;
        for n in 0..=8usize {
            ok &= jc.b(n) == BiLaurent::var_y().add_ref(&q_int(n as i64).unwrap());
            if n >= 1 {
                ok &= jc.lam(n) == BiLaurent::var_y().mul_ref(&q_int(n as i64).unwrap());
            }
        }
        out.push(check(
            "asc-jacobi-charlier-reduction",
            ok,
            "B=0, y=a(1-q) gives b_n = a + [n]_q and lambda_n = a [n]_q",
        ));
    }

    // linearization: closed double sum vs basis expansion
    let mut sampler = RationalSampler::new(config.seed.wrapping_add(2));
    for i in 0..config.samples {
        let mut last_pair = (String::new(), String::new());
        let result = sampler.with_resampling(|s| {
            let alpha = s.sample_where(|v| !v.is_zero())?;
            let beta = s.sample_where(|v| !v.is_zero())?;
            let q = s.sample_q();
            for n1 in 0..=5usize {
                for n2 in 0..=5usize {
                    let basis = c_basis(n1, n2, &alpha, &beta, &q);
                    for n3 in 0..=(n1 + n2) {
                        let closed =
                            asc_linearize_c(n1, n2, n3, &alpha, &beta, &q, CMethod::Closed)?;
                        last_pair = (closed.to_string(), basis[n3].to_string());
                        if closed != basis[n3] {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        });
        let (pass, detail) = match result {
            Ok(true) => (true, format!("closed sum = basis expansion, n1,n2 <= 5 (seed {})", config.seed)),
            Ok(false) => (false, "closed sum disagrees with basis expansion".into()),
            Err(e) => (false, format!("sampling failed: {e}")),
        };
        out.push(check_sides(
            format!("asc-linearize sample={i:02}"),
            pass,
            detail,
            last_pair.0,
            last_pair.1,
        ));
    }

    // the three explicit hypergeometric forms against the recurrence
    let mut sampler = RationalSampler::new(config.seed.wrapping_add(3));
    for i in 0..config.samples {
        let mut last_pair = (String::new(), String::new());
        let result = sampler.with_resampling(|s| {
            let u = s.sample_where(|v| !v.is_zero())?;
            let alpha = s.sample_where(|v| !v.is_zero())?;
            let beta = s.sample_where(|v| !v.is_zero())?;
            let q = s.sample_q();
            let two = BigRational::from_integer(2.into());
            let x = (&u + u.recip()) / two;
            for n in 0..=6usize {
                let direct = rat_poly_eval(&asc_q_poly(n, &alpha, &beta, &q), &x);
                for form in [HyperForm::Phi32, HyperForm::Phi21A, HyperForm::Phi21B] {
                    let v = asc_hypergeometric(n, &u, &alpha, &beta, &q, form)?;
                    last_pair = (v.to_string(), direct.to_string());
                    if v != direct {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        });
        let (pass, detail) = match result {
            Ok(true) => (true, format!("all three forms equal the recurrence, n <= 6 (seed {})", config.seed)),
            Ok(false) => (false, "a hypergeometric form disagrees".into()),
            Err(e) => (false, format!("sampling failed: {e}")),
        };
        out.push(check_sides(
            format!("asc-hypergeometric sample={i:02}"),
            pass,
            detail,
            last_pair.0,
            last_pair.1,
        ));
    }

    // the four moment routes at rational points
    let mut sampler = RationalSampler::new(config.seed.wrapping_add(4));
    for i in 0..config.samples {
        let mut last_pair = (String::new(), String::new());
        let result = sampler.with_resampling(|s| {
            let y = s.sample_where(|v| !v.is_zero())?;
            let big_b = s.sample();
            let q = s.sample_q();
            let params = AscParams::at_point(y.clone(), big_b.clone(), q.clone());
            let jc = jacobi_for(&params)?;
            let gf = moment_gf_truncated(
                &GfFamily::AscAt {
                    y: y.clone(),
                    big_b: big_b.clone(),
                    q: q.clone(),
                },
                8,
            )?;
            for n in 0..=8usize {
                let motzkin = moments_motzkin(n, &jc).as_constant().unwrap();
                if gf.coeff(n).as_constant().unwrap() != motzkin {
                    return Ok(false);
                }
                if n >= 1 {
                    if asc_moment_stirling(n, &params)?.as_constant().unwrap() != motzkin {
                        return Ok(false);
                    }
                    let explicit = asc_moment_explicit(n, &y, &big_b, &q)?;
                    last_pair = (motzkin.to_string(), explicit.to_string());
                    if explicit != motzkin {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        });
        let (pass, detail) = match result {
            Ok(true) => (
                true,
                format!("motzkin = stirling = explicit = gf, n <= 8 (seed {})", config.seed),
            ),
            Ok(false) => (false, "a moment route disagrees".into()),
            Err(e) => (false, format!("sampling failed: {e}")),
        };
        out.push(check_sides(
            format!("asc-moments sample={i:02}"),
            pass,
            detail,
            last_pair.0,
            last_pair.1,
        ));
    }

    out
}

// --------------------------------------------------------------- bijections

fn bijections_suite(config: &VerifyConfig) -> Vec<CheckResult> {
    let max_n = config.max_n.unwrap_or(7);
    let mut out = Vec::new();

    for n in 1..=max_n {
        let mut perms: Vec<Permutation> = Vec::new();
        for_each_permutation(n, |p| perms.push(p.clone()));

        // Phi_k: bijection onto the codomain, statistics, round trip
        let mut ok_phi = true;
        let mut ok_l = true;
        for k in 1..=n {
            let mut images = std::collections::BTreeSet::new();
            let mut codomain = 0usize;
            for p in &perms {
                if in_phi_codomain(p, k) {
                    codomain += 1;
                }
                if !in_phi_domain(p, k) {
                    ok_phi &= phi(p, k) == Err(Error::NotInDomain);
                    continue;
                }
                match phi(p, k) {
                    Ok(img) => {
                        ok_phi &= in_phi_codomain(&img, k);
                        ok_phi &= (img.wex(), img.cr()) == (p.wex(), p.cr());
                        ok_phi &= phi_inverse(&img, k) == Ok(p.clone());
                        // shift property on positions mapped by the first case
                        for i in 1..=(n - k) {
                            if p.apply(i + k) > k {
                                ok_phi &= (i as i64 - img.apply(i) as i64)
                                    == (i as i64 + k as i64 - p.apply(i + k) as i64);
                            }
                        }
                        images.insert(img);
                        let (l1, l2, l3, l4) = crossing_decomposition_l(p, k).unwrap();
                        ok_l &= l1 + l2 + l3 == p.cr() && l3 == l4;
                    }
                    Err(_) => ok_phi = false,
                }
            }
            ok_phi &= images.len() == codomain;
        }
        out.push(check(
            format!("phi-bijection n={n}"),
            ok_phi,
            "bijective onto the codomain, preserves (wex, cr), inverts",
        ));
        out.push(check(
            format!("phi-decomposition n={n}"),
            ok_l,
            "|L1|+|L2|+|L3| = cr and |L3| = |L4|",
        ));

        // A_i identities on all of S_n
        let mut ok_a = true;
        for p in &perms {
            let inv = p.inverse();
            for i in 1..=n {
                let a1 = a_set_count(p, i);
                let a2 = (1..=n).filter(|&j| j > i && i >= p.apply(j)).count();
                let a3 = a_set_count(&inv, i);
                ok_a &= a1 == a2 && a2 == a3;
            }
        }
        out.push(check(
            format!("phi-asets n={n}"),
            ok_a,
            "|A_i(sigma)| = #{j > i >= sigma(j)} = |A_i(sigma^-1)|",
        ));

        // Gamma: bijection, statistics, inverse relation, decompositions
        if n >= 2 {
            let mut ok_g = true;
            let mut ok_gd = true;
            for n1 in 1..n {
                for n2 in 1..=(n - n1) {
                    let mut images = std::collections::BTreeSet::new();
                    let mut codomain = 0usize;
                    for p in &perms {
                        if in_gamma_domain(p, n2, n1) {
                            codomain += 1;
                        }
                        if !in_gamma_domain(p, n1, n2) {
                            ok_g &= gamma(p, n1, n2) == Err(Error::NotInDomain);
                            continue;
                        }
                        match gamma(p, n1, n2) {
                            Ok(img) => {
                                ok_g &= in_gamma_domain(&img, n2, n1);
                                ok_g &= (img.wex(), img.cr()) == (p.wex(), p.cr());
                                ok_g &= gamma(&img, n2, n1) == Ok(p.clone());
                                for i in (n1 + n2 + 1)..=n {
                                    if p.apply(i) > n1 + n2 {
                                        ok_g &= img.apply(i) == p.apply(i);
                                    }
                                }
                                images.insert(img);
                                let g = crossing_decomposition_g(p, n1, n2).unwrap();
                                ok_gd &= g.iter().sum::<usize>() == p.cr();
                                ok_gd &= g5_closed(p, n1, n2).unwrap() == g[4];
                            }
                            Err(_) => ok_g = false,
                        }
                    }
                    ok_g &= images.len() == codomain;
                }
            }
            out.push(check(
                format!("gamma-bijection n={n}"),
                ok_g,
                "bijective onto the swapped domain, preserves (wex, cr), Gamma^(n2,n1) inverts",
            ));
            out.push(check(
                format!("gamma-decomposition n={n}"),
                ok_gd,
                "sum of |G_i| = cr and the closed |G_5| count matches",
            ));
        }
    }

    // class mappings: Phi rotates, Gamma swaps
    for total in 2..=max_n {
        let mut ok_phi = true;
        let mut ok_gamma = true;
        for sizes in compositions(total) {
            let b = BlockSpec::new(sizes.clone()).unwrap();
            let mut rotated_sizes = sizes[1..].to_vec();
            rotated_sizes.push(sizes[0]);
            let rotated = BlockSpec::new(rotated_sizes).unwrap();
            let members = b.enumerate_class(config.cap).expect("within cap");
            let mut phi_images = std::collections::BTreeSet::new();
            for p in &members {
                match phi(p, sizes[0]) {
                    Ok(img) => {
                        ok_phi &= rotated.is_generalized_derangement(&img).unwrap();
                        phi_images.insert(img);
                    }
                    Err(_) => ok_phi = false,
                }
            }
            ok_phi &= phi_images.len() == rotated.enumerate_class(config.cap).unwrap().len();

            if sizes.len() >= 2 {
                let mut swapped_sizes = sizes.clone();
                swapped_sizes.swap(0, 1);
                let swapped = BlockSpec::new(swapped_sizes).unwrap();
                let mut gamma_images = std::collections::BTreeSet::new();
                for p in &members {
                    match gamma(p, sizes[0], sizes[1]) {
                        Ok(img) => {
                            ok_gamma &= swapped.is_generalized_derangement(&img).unwrap();
                            gamma_images.insert(img);
                        }
                        Err(_) => ok_gamma = false,
                    }
                }
                ok_gamma &= gamma_images.len() == swapped.enumerate_class(config.cap).unwrap().len();
            }
        }
        out.push(check(
            format!("phi-class-rotation total={total}"),
            ok_phi,
            "Phi_{n1} maps D(n1,...,nk) onto D(n2,...,nk,n1)",
        ));
        out.push(check(
            format!("gamma-class-swap total={total}"),
            ok_gamma,
            "Gamma^(n1,n2) maps D(n1,n2,rest) onto D(n2,n1,rest)",
        ));
    }

    // the two fifteen-point golden pairs
    {
        let sigma =
            Permutation::new(vec![6, 7, 15, 8, 11, 10, 13, 14, 1, 4, 12, 5, 3, 9, 2]).unwrap();
        let expect =
            Permutation::new(vec![5, 8, 7, 10, 11, 13, 1, 9, 2, 15, 6, 14, 3, 4, 12]).unwrap();
        let got = phi(&sigma, 3);
        let pass = got == Ok(expect.clone())
            && (sigma.wex(), sigma.cr()) == (9, 28)
            && (expect.wex(), expect.cr()) == (9, 28)
            && phi_inverse(&expect, 3) == Ok(sigma);
        out.push(check(
            "phi-golden-15",
            pass,
            "the worked 15-point pair round-trips with (wex, cr) = (9, 28)",
        ));

        let sigma =
            Permutation::new(vec![15, 4, 6, 13, 3, 8, 2, 14, 1, 7, 12, 5, 10, 9, 11]).unwrap();
        let expect =
            Permutation::new(vec![15, 5, 13, 6, 3, 1, 8, 14, 2, 7, 12, 4, 10, 9, 11]).unwrap();
        let got = gamma(&sigma, 3, 4);
        let pass = got == Ok(expect.clone())
            && (sigma.wex(), sigma.cr()) == (7, 15)
            && (expect.wex(), expect.cr()) == (7, 15)
            && gamma(&expect, 4, 3) == Ok(sigma);
        out.push(check(
            "gamma-golden-15",
            pass,
            "the worked 15-point pair round-trips with (wex, cr) = (7, 15)",
        ));
    }

    out
}

// ---------------------------------------------------------------- classical

fn classical_suite(config: &VerifyConfig) -> Vec<CheckResult> {
    let max_n = config.max_n.unwrap_or(8).min(config.cap);
    let mut out = Vec::new();
    let one = BigRational::one();
    let jc = JacobiCoefficients::laguerre();

    // mu_n at y=q=1 is n!
    let mut fact = BigRational::one();
    for n in 1..=config.cap {
        fact *= BigRational::from_integer((n as i64).into());
        let v = moments_motzkin(n, &jc).eval(&one, &one).unwrap();
        out.push(check_sides(
            format!("classical-moment n={n:02}"),
            v == fact,
            format!("mu_{n}(1,1) = {n}!"),
            v.to_string(),
            fact.to_string(),
        ));
    }

    // I(n1,n2,n3) at y=q=1 equals the classical linearization sum
    for n1 in 1..=4usize {
        for n2 in 1..=4usize {
            for n3 in 1..=4usize {
                let sym = linearize_closed3(n1, n2, n3)
                    .expect("collapses to a polynomial")
                    .eval(&one, &one)
                    .unwrap();
                let classical = classical_lin3(n1, n2, n3);
                out.push(check_sides(
                    format!("classical-linearization blocks={n1},{n2},{n3}"),
                    sym == BigRational::from_integer(classical.clone()),
                    "q=1, y=1 value equals the factorial sum",
                    sym.to_string(),
                    classical.to_string(),
                ));
            }
        }
    }

    // L(prod L_{n_i}) at y=q=1 counts the generalized derangements
    let mut table = MomentTable::laguerre();
    table.ensure(max_n);
    for n in 1..=max_n {
        let mut ok = true;
        for sizes in compositions(n) {
            let b = BlockSpec::new(sizes.clone()).unwrap();
            let functional = linearize_functional(&b, &table)
                .expect("table covers degree")
                .eval(&one, &one)
                .unwrap();
            let mut count = 0u64;
            b.for_each_in_class(|_| count += 1);
            ok &= functional == BigRational::from_integer(count.into());
        }
        out.push(check(
            format!("classical-derangement-count n={n:02}"),
            ok,
            "functional route at y=q=1 counts |D(n1,...,nk)| for all compositions",
        ));
    }

    out
}

/// The classical linearization value
/// `sum_s n1! n2! n3! 2^(N2+n3-2s) s! /
///  ((s-n1)! (s-n2)! (s-n3)! (N2+n3-2s)!)` with vanishing negative
/// factorials; `N2 = n1 + n2`.
fn classical_lin3(n1: usize, n2: usize, n3: usize) -> BigInt {
    let (n1, n2, n3) = (n1 as i64, n2 as i64, n3 as i64);
    let big_n2 = n1 + n2;
    let fact = |m: i64| -> BigInt {
        let mut v = BigInt::one();
        for j in 2..=m {
            v *= j;
        }
        v
    };
    let mut total = BigInt::zero();
    let s_lo = n1.max(n2).max(n3);
    for s in s_lo..=((big_n2 + n3) / 2) {
        let m = big_n2 + n3 - 2 * s;
        if m < 0 {
            continue;
        }
        let num = fact(n1) * fact(n2) * fact(n3) * BigInt::from(2).pow(m as u32) * fact(s);
        let den = fact(s - n1) * fact(s - n2) * fact(s - n3) * fact(m);
        total += num / den;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> VerifyConfig {
        VerifyConfig {
            cap: 6,
            seed: 42,
            samples: 2,
            max_n: Some(4),
        }
    }

    #[test]
    fn all_small_suites_pass() {
        for suite in [
            Suite::Moments,
            Suite::Stirling,
            Suite::Linearization,
            Suite::Asc,
            Suite::Bijections,
            Suite::Classical,
        ] {
            let results = run_suite(suite, &small_config());
            assert!(!results.is_empty());
            for r in &results {
                assert!(r.pass, "{:?} check {} failed: {}", suite, r.name, r.detail);
            }
            // report order is sorted by name
            let mut names: Vec<&String> = results.iter().map(|r| &r.name).collect();
            let mut sorted = names.clone();
            sorted.sort();
            assert_eq!(names.len(), sorted.len());
            names.sort();
            assert_eq!(names, sorted);
        }
    }

    #[test]
    fn classical_lin3_counts_derangements() {
        // the factorial sum counts |D(n1,n2,n3)|
        for (n1, n2, n3) in [(1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2)] {
            let b = BlockSpec::new(vec![n1, n2, n3]).unwrap();
            let mut count = 0u64;
            b.for_each_in_class(|_| count += 1);
            assert_eq!(classical_lin3(n1, n2, n3), BigInt::from(count));
        }
    }
}
