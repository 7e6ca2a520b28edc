//! Acceptance suite: one test per acceptance criterion, each printing a
//! single pass/fail line (visible with `cargo test -- --nocapture`) and
//! enforcing its runtime budget.

use std::time::{Duration, Instant};

use num::BigRational;
use qlaguerre::perm::blocks::permutation_polynomial;
use qlaguerre::poly::{laguerre_poly, linearize, LaguerreMethod, LinMethod};
use qlaguerre::verify::{run_suite, CheckResult, Suite, VerifyConfig};
use qlaguerre::{BiLaurent, BlockSpec, XPoly};

fn report(criterion: &str, results: &[CheckResult], elapsed: Duration, budget: Duration) {
    let failed: Vec<&CheckResult> = results.iter().filter(|r| !r.pass).collect();
    let status = if failed.is_empty() && elapsed <= budget {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "acceptance {criterion}: {status} ({} checks, {:.2}s, budget {:.0}s)",
        results.len(),
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    for f in &failed {
        println!("  failed: {} -- {}", f.name, f.detail);
    }
    assert!(
        failed.is_empty(),
        "criterion {criterion}: {} checks failed",
        failed.len()
    );
    assert!(
        elapsed <= budget,
        "criterion {criterion}: runtime {:.2}s exceeds budget {:.2}s",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
}

fn mono(c: i64, ey: i64, eq: i64) -> BiLaurent {
    BiLaurent::monomial(BigRational::from_integer(c.into()), ey, eq)
}

/// Criterion 1: exact reproduction of the displayed values: L_1..L_3, the
/// first four moments, I(2,2,1), and the sixteen weighted members of
/// D(2,2,1). Budget 1 s.
#[test]
fn criterion_1_displayed_values() {
    let start = Instant::now();
    let mut results = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        results.push(CheckResult {
            name: name.to_string(),
            pass,
            detail,
            sides: None,
        });
    };

    // L_1 = x - y
    let l1 = laguerre_poly(1, LaguerreMethod::Recurrence);
    let want1 = XPoly::var_x().sub_ref(&XPoly::constant(BiLaurent::var_y()));
    push("laguerre-l1", l1 == want1, format!("{l1}"));

    // L_2 = x^2 - (1 + 2y + qy) x + (1+q) y^2
    let l2 = laguerre_poly(2, LaguerreMethod::Recurrence);
    let want2 = XPoly::from_coeffs(vec![
        BiLaurent::one().add_ref(&BiLaurent::var_q()).mul_monomial(2, 0),
        BiLaurent::one()
            .add_ref(&mono(2, 1, 0))
            .add_ref(&mono(1, 1, 1))
            .neg_ref(),
        BiLaurent::one(),
    ]);
    push("laguerre-l2", l2 == want2, format!("{l2}"));

    // L_3 with all four displayed coefficients
    let l3 = laguerre_poly(3, LaguerreMethod::Recurrence);
    let want3 = XPoly::from_coeffs(vec![
        mono(2, 3, 2)
            .add_ref(&mono(2, 3, 1))
            .add_ref(&mono(1, 3, 3))
            .add_ref(&mono(1, 3, 0))
            .neg_ref(),
        mono(1, 2, 3)
            .add_ref(&mono(1, 1, 2))
            .add_ref(&mono(1, 0, 1))
            .add_ref(&mono(2, 1, 1))
            .add_ref(&mono(3, 2, 2))
            .add_ref(&mono(1, 0, 0))
            .add_ref(&mono(4, 2, 1))
            .add_ref(&mono(2, 1, 0))
            .add_ref(&mono(3, 2, 0)),
        mono(1, 1, 2)
            .add_ref(&mono(3, 1, 0))
            .add_ref(&mono(1, 0, 1))
            .add_ref(&mono(2, 0, 0))
            .add_ref(&mono(2, 1, 1))
            .neg_ref(),
        BiLaurent::one(),
    ]);
    push("laguerre-l3", l3 == want3, format!("{l3}"));

    // mu_1 .. mu_4 as listed
    let mus = [
        BiLaurent::var_y(),
        BiLaurent::var_y().add_ref(&mono(1, 2, 0)),
        BiLaurent::var_y()
            .add_ref(&mono(3, 2, 0))
            .add_ref(&mono(1, 2, 1))
            .add_ref(&mono(1, 3, 0)),
        BiLaurent::var_y()
            .add_ref(&mono(6, 2, 0))
            .add_ref(&mono(4, 2, 1))
            .add_ref(&mono(1, 2, 2))
            .add_ref(&mono(6, 3, 0))
            .add_ref(&mono(4, 3, 1))
            .add_ref(&mono(1, 3, 2))
            .add_ref(&mono(1, 4, 0)),
    ];
    for (i, want) in mus.iter().enumerate() {
        let n = i + 1;
        let got = permutation_polynomial(n, 10).unwrap();
        push(
            &format!("moment-list n={n}"),
            &got == want,
            got.canonical_string(),
        );
    }

    // I(2,2,1) = (1+q)^3 (1+qy) y^2 by all three methods
    let product = BiLaurent::one()
        .add_ref(&BiLaurent::var_q())
        .pow(3)
        .mul_ref(&BiLaurent::one().add_ref(&mono(1, 1, 1)))
        .mul_monomial(2, 0);
    let b221 = BlockSpec::new(vec![2, 2, 1]).unwrap();
    for method in [
        LinMethod::Enumeration,
        LinMethod::Functional,
        LinMethod::Closed3,
    ] {
        let got = linearize(&b221, method, 10).unwrap();
        push(
            &format!("linearization-221 method={method:?}"),
            got == product,
            got.canonical_string(),
        );
    }

    // the sixteen members of D(2,2,1) and their weight multiset
    let members = b221.enumerate_class(10).unwrap();
    push(
        "class-221-count",
        members.len() == 16,
        format!("{} members", members.len()),
    );
    let mut got_weights: Vec<(usize, usize)> =
        members.iter().map(|p| (p.wex(), p.cr())).collect();
    got_weights.sort_unstable();
    let mut want_weights: Vec<(usize, usize)> = vec![
        (2, 2),
        (3, 3),
        (3, 1),
        (2, 0),
        (2, 2),
        (3, 3),
        (3, 3),
        (2, 2),
        (3, 2),
        (2, 1),
        (3, 4),
        (3, 2),
        (2, 3),
        (3, 2),
        (2, 1),
        (2, 1),
    ];
    want_weights.sort_unstable();
    push(
        "class-221-weights",
        got_weights == want_weights,
        format!("{got_weights:?}"),
    );

    report(
        "1 (displayed values)",
        &results,
        start.elapsed(),
        Duration::from_secs(1),
    );
}

/// Criterion 2: four-route moment agreement, symbolic for n <= 8 and
/// enumerative against Motzkin up to the cap 10. Budget 2 min.
#[test]
fn criterion_2_moment_routes() {
    let start = Instant::now();
    let results = run_suite(Suite::Moments, &VerifyConfig::default());
    report(
        "2 (four-route moments)",
        &results,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

/// Criterion 3: the linearization identity over every composition with
/// total <= 8 (all orderings), closed3 on every k=3 case, and
/// orthogonality for n1, n2 <= 5. Budget 5 min.
#[test]
fn criterion_3_linearization_identity() {
    let start = Instant::now();
    let results = run_suite(Suite::Linearization, &VerifyConfig::default());
    report(
        "3 (linearization identity)",
        &results,
        start.elapsed(),
        Duration::from_secs(300),
    );
}

/// Criterion 4: classical specializations at q = 1, y = 1. Exact equality,
/// and comfortably inside the moment budget.
#[test]
fn criterion_4_classical_specializations() {
    let start = Instant::now();
    let results = run_suite(Suite::Classical, &VerifyConfig::default());
    report(
        "4 (classical specializations)",
        &results,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

/// Criterion 5: the Al-Salam-Chihara layer at 20 seeded rational points:
/// linearization closed sum vs basis expansion (n1, n2 <= 5), the three
/// hypergeometric forms vs the recurrence (n <= 6), and the three moment
/// formulas vs the Motzkin route (n <= 8). Budget 2 min.
#[test]
fn criterion_5_asc_layer() {
    let start = Instant::now();
    let results = run_suite(Suite::Asc, &VerifyConfig::default());
    assert!(
        results.iter().filter(|r| r.name.starts_with("asc-linearize")).count() >= 20,
        "at least 20 seeded samples"
    );
    report(
        "5 (Al-Salam-Chihara layer)",
        &results,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

/// Criterion 6: the Stirling suite: inversion to n = 8, both
/// specializations, and the closed form at 20 sample points.
#[test]
fn criterion_6_stirling() {
    let start = Instant::now();
    let results = run_suite(Suite::Stirling, &VerifyConfig::default());
    report(
        "6 (Stirling numbers)",
        &results,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

/// Criterion 7: both bijections exhaustively to n = 7, class mappings,
/// inverse relations, crossing decompositions, the closed |G_5| count and
/// the two 15-point golden pairs. Budget 5 min.
#[test]
fn criterion_7_bijections() {
    let start = Instant::now();
    let mut results = run_suite(Suite::Bijections, &VerifyConfig::default());
    assert!(results.iter().any(|r| r.name == "phi-golden-15"));
    assert!(results.iter().any(|r| r.name == "gamma-golden-15"));

    // the two worked 15-point pairs, round-tripped against the committed
    // golden file
    let golden = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("golden")
        .join("bijection_pairs.csv");
    let content = std::fs::read_to_string(&golden).expect("committed golden pairs");
    let mut rows = 0;
    for line in content.lines().skip(1).filter(|l| !l.trim().is_empty()) {
        let fields: Vec<&str> = line.split(',').collect();
        let quoted: Vec<&str> = line.split('"').collect();
        let sigma = qlaguerre::Permutation::parse(quoted[1]).unwrap();
        let image = qlaguerre::Permutation::parse(quoted[3]).unwrap();
        let round_trip = match fields[0] {
            "phi" => {
                let k: usize = fields[1].parse().unwrap();
                qlaguerre::bijection::phi(&sigma, k) == Ok(image.clone())
                    && qlaguerre::bijection::phi_inverse(&image, k) == Ok(sigma.clone())
            }
            _ => {
                let n1: usize = fields[1].parse().unwrap();
                let n2: usize = fields[2].parse().unwrap();
                qlaguerre::bijection::gamma(&sigma, n1, n2) == Ok(image.clone())
                    && qlaguerre::bijection::gamma(&image, n2, n1) == Ok(sigma.clone())
            }
        };
        results.push(CheckResult {
            name: format!("golden-file-pair map={}", fields[0]),
            pass: round_trip && (sigma.wex(), sigma.cr()) == (image.wex(), image.cr()),
            detail: "committed pair round-trips with preserved statistics".into(),
            sides: Some((sigma.to_string(), image.to_string())),
        });
        rows += 1;
    }
    assert_eq!(rows, 2, "both 15-point pairs are committed");

    report(
        "7 (bijections)",
        &results,
        start.elapsed(),
        Duration::from_secs(300),
    );
}
