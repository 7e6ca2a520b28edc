//! End-to-end tests of the `qlag` binary: output contracts and exit codes.

use std::process::{Command, Output};

fn qlag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qlag(args);
    assert!(
        out.status.success(),
        "qlag {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn moments_canonical_form() {
    assert_eq!(stdout(&["moments", "--n", "0"]), "1\n");
    assert_eq!(
        stdout(&["moments", "--n", "3"]),
        "1*y + 3*y^2 + 1*y^2*q + 1*y^3\n"
    );
    // all four laguerre routes print identically
    let want = stdout(&["moments", "--n", "4", "--method", "motzkin"]);
    for method in ["enum", "closed", "gf"] {
        assert_eq!(stdout(&["moments", "--n", "4", "--method", method]), want);
    }
}

#[test]
fn linearize_block_221() {
    let want = "1*y^2 + 3*y^2*q + 3*y^2*q^2 + 1*y^2*q^3 + 1*y^3*q + 3*y^3*q^2 + 3*y^3*q^3 + 1*y^3*q^4\n";
    for method in ["functional", "enum", "closed3"] {
        assert_eq!(
            stdout(&["linearize", "--blocks", "2,2,1", "--method", method]),
            want
        );
    }
}

#[test]
fn json_output_round_trips() {
    let js = stdout(&["moments", "--n", "3", "--format", "json"]);
    let parsed = qlaguerre::BiLaurent::from_json(js.trim()).unwrap();
    assert_eq!(
        parsed.canonical_string(),
        "1*y + 3*y^2 + 1*y^2*q + 1*y^3"
    );
}

#[test]
fn bijection_round_trip_and_stats() {
    let out = stdout(&[
        "bijection", "--map", "gamma", "--sigma",
        "15,4,6,13,3,8,2,14,1,7,12,5,10,9,11", "--n1", "3", "--n2", "4", "--stats",
    ]);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "15,5,13,6,3,1,8,14,2,7,12,4,10,9,11");
    assert_eq!(lines.next().unwrap(), "wex,cr before: 7,15  after: 7,15");
}

#[test]
fn class_listing_csv() {
    let out = stdout(&["class", "--blocks", "2,2,1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "sigma,wex,cr");
    assert_eq!(lines.len(), 17); // header + sixteen members
    assert!(lines[1].starts_with('"'));
}

#[test]
fn exit_codes() {
    // domain error: not in the bijection domain
    let out = qlag(&["bijection", "--map", "phi", "--sigma", "1,2,3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert_eq!(err.lines().count(), 1, "one-line diagnostic");

    // cap exceeded is a domain error
    let out = qlag(&["linearize", "--blocks", "6,6", "--method", "enum"]);
    assert_eq!(out.status.code(), Some(1));

    // usage errors exit 2
    let out = qlag(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qlag(&["moments"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qlag(&["moments", "--n", "2", "--family", "asc"]); // missing point
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_qlag"))
        .env("QLAG_CAP", "4")
        .args(["moments", "--n", "5", "--method", "enum"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_suite_runs_and_is_deterministic() {
    let args = [
        "verify", "--suite", "stirling", "--max-n", "3", "--samples", "2",
    ];
    let first = stdout(&args);
    let second = stdout(&args);
    assert_eq!(first, second, "byte-identical across runs with one config");
    assert!(first.lines().any(|l| l.contains("PASS")));
    assert!(!first.contains("FAIL"));

    // names arrive sorted
    let names: Vec<&str> = first
        .lines()
        .filter(|l| l.contains(" PASS ") || l.contains(" FAIL "))
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);

    // csv format carries the check,status,detail header
    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let csv = stdout(&csv_args);
    assert!(csv.starts_with("check,status,detail"));
}

#[test]
fn output_file_flag() {
    let dir = std::env::temp_dir().join(format!("qlag-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mu3.txt");
    let out = qlag(&[
        "moments",
        "--n",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "1*y + 3*y^2 + 1*y^2*q + 1*y^3\n"
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn asc_point_commands() {
    assert_eq!(
        stdout(&["poly", "--family", "asc", "--n", "2", "--alpha", "2", "--beta", "3", "--q", "1/2"]),
        "15 - 15*x + 4*x^2\n"
    );
    // the three asc moment routes agree at the point
    let base = stdout(&[
        "moments", "--n", "3", "--family", "asc", "--method", "motzkin",
        "--alpha", "1/2", "--beta", "1/3", "--q", "1/5",
    ]);
    for method in ["closed", "gf"] {
        assert_eq!(
            stdout(&[
                "moments", "--n", "3", "--family", "asc", "--method", method,
                "--alpha", "1/2", "--beta", "1/3", "--q", "1/5",
            ]),
            base
        );
    }
}
