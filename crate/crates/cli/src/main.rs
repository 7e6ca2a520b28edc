//! `qlag`: exact tables, formula evaluation, bijections, and verification
//! suites for the Al-Salam-Chihara q-Laguerre toolkit. All arithmetic is
//! exact; rationals are written `p` or `p/r`.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qlaguerre::algebra::parse_rational;
use qlaguerre::perm::blocks::permutation_polynomial;
use qlaguerre::poly::{
    asc_moment_explicit, asc_q_poly, jacobi_for, laguerre_poly, linearize, moment_closed_charlier,
    moment_closed_laguerre, moment_gf_truncated, moments_motzkin, stirling_s1, stirling_s2,
    AscParams, GfFamily, LaguerreMethod, LinMethod,
};
use qlaguerre::verify::{run_suite, CheckResult, Suite, VerifyConfig};
use qlaguerre::{bijection, BiLaurent, BigRational, BlockSpec, Error, Permutation};

#[derive(Parser)]
#[command(name = "qlag", version, about = "Exact q-Laguerre / Al-Salam-Chihara toolkit")]
struct Cli {
    /// Exhaustive-enumeration cap (largest n for full sweeps)
    #[arg(long, global = true, default_value_t = 10, env = "QLAG_CAP")]
    cap: usize,
    /// Seed for randomized rational-point checks
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Sample count for rational-point checks
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n-th moment of a family in canonical form
    Moments(MomentsArgs),
    /// Print a polynomial of the q-Laguerre or Al-Salam-Chihara family
    Poly(PolyArgs),
    /// Print a y-q-Stirling number
    Stirling(StirlingArgs),
    /// Print the linearization coefficient I(n1,...,nk)
    Linearize(LinearizeArgs),
    /// List a generalized derangement class as `sigma,wex,cr` rows
    Class(ClassArgs),
    /// Apply a statistic-preserving bijection to a permutation
    Bijection(BijectionArgs),
    /// Run a named verification suite; exits 0 iff every check passes
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Laguerre,
    Charlier,
    Asc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MomentMethod {
    Enum,
    Motzkin,
    Closed,
    Gf,
}

#[derive(Args)]
struct MomentsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Family::Laguerre)]
    family: Family,
    #[arg(long, value_enum, default_value_t = MomentMethod::Motzkin)]
    method: MomentMethod,
    /// alpha (required for --family asc; y = 1/alpha^2)
    #[arg(long)]
    alpha: Option<String>,
    /// beta (required for --family asc; B = alpha*beta)
    #[arg(long)]
    beta: Option<String>,
    /// q (required for --family asc)
    #[arg(long)]
    q: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFamily {
    Laguerre,
    Asc,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    family: PolyFamily,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    q: Option<String>,
}

#[derive(Args)]
struct StirlingArgs {
    /// S (second kind) or s (first kind)
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LinearizeMethod {
    Functional,
    Enum,
    Closed3,
}

#[derive(Args)]
struct LinearizeArgs {
    /// Comma-separated block sizes, e.g. 2,2,1
    #[arg(long)]
    blocks: String,
    #[arg(long, value_enum, default_value_t = LinearizeMethod::Functional)]
    method: LinearizeMethod,
}

#[derive(Args)]
struct ClassArgs {
    /// Comma-separated block sizes
    #[arg(long)]
    blocks: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    Phi,
    Gamma,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(long, value_enum)]
    map: MapKind,
    /// Comma-separated image sequence, e.g. 5,4,1,2,3
    #[arg(long)]
    sigma: String,
    /// Block size k (phi)
    #[arg(long)]
    k: Option<usize>,
    /// First block size (gamma)
    #[arg(long)]
    n1: Option<usize>,
    /// Second block size (gamma)
    #[arg(long)]
    n2: Option<usize>,
    /// Also print (wex, cr) before and after
    #[arg(long)]
    stats: bool,
    /// Print the crossing-decomposition counters as a CSV row
    #[arg(long)]
    decompose: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// all, moments, stirling, linearization, asc, bijections, classical
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest symbolic/exhaustive depth (suite-specific default)
    #[arg(long)]
    max_n: Option<usize>,
    /// Also write golden `case,lhs,rhs,equal` CSV files, one per suite
    #[arg(long)]
    golden_dir: Option<std::path::PathBuf>,
}

/// Errors that should exit 2 (bad usage) rather than 1 (domain failure).
struct UsageError(String);

enum RunError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Domain(e)
    }
}

impl From<UsageError> for RunError {
    fn from(e: UsageError) -> Self {
        RunError::Usage(e.0)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut sink: Box<dyn Write> = match &cli.output {
        Some(path) => match std::fs::File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("error: cannot open {}: {e}", path.display());
                return ExitCode::from(1);
            }
        },
        None => Box::new(std::io::stdout()),
    };
    match run(&cli, &mut sink) {
        Ok(code) => code,
        Err(RunError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(RunError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<ExitCode, RunError> {
    if cli.cap < 1 {
        return Err(UsageError("--cap must be at least 1".into()).into());
    }
    if cli.samples < 1 {
        return Err(UsageError("--samples must be at least 1".into()).into());
    }
    match &cli.command {
        Command::Moments(args) => {
            let poly = compute_moment(args, cli.cap)?;
            emit_poly(out, &poly, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Poly(args) => {
            match args.family {
                PolyFamily::Laguerre => {
                    let p = laguerre_poly(args.n, LaguerreMethod::Recurrence);
                    writeln!(out, "{p}").ok();
                }
                PolyFamily::Asc => {
                    let (alpha, beta, q) = point_params(&args.alpha, &args.beta, &args.q)?;
                    let p = asc_q_poly(args.n, &alpha, &beta, &q);
                    writeln!(out, "{}", format_rat_poly(&p)).ok();
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stirling(args) => {
            let poly = match args.kind.as_str() {
                "S" => stirling_s2(args.n, args.k),
                "s" => stirling_s1(args.n, args.k),
                other => {
                    return Err(UsageError(format!("--kind must be S or s, got {other:?}")).into())
                }
            };
            emit_poly(out, &poly, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Linearize(args) => {
            let blocks = parse_blocks(&args.blocks)?;
            let method = match args.method {
                LinearizeMethod::Functional => LinMethod::Functional,
                LinearizeMethod::Enum => LinMethod::Enumeration,
                LinearizeMethod::Closed3 => {
                    if blocks.sizes().len() != 3 {
                        return Err(UsageError(format!(
                            "--method closed3 needs exactly 3 blocks, got {}",
                            blocks.sizes().len()
                        ))
                        .into());
                    }
                    LinMethod::Closed3
                }
            };
            let poly = linearize(&blocks, method, cli.cap)?;
            emit_poly(out, &poly, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Class(args) => {
            let blocks = parse_blocks(&args.blocks)?;
            writeln!(out, "sigma,wex,cr").ok();
            for p in blocks.enumerate_class(cli.cap)? {
                writeln!(out, "\"{p}\",{},{}", p.wex(), p.cr()).ok();
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bijection(args) => {
            run_bijection(args, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let suite: Suite = args
                .suite
                .parse()
                .map_err(|e: Error| UsageError(e.to_string()))?;
            let config = VerifyConfig {
                cap: cli.cap,
                seed: cli.seed,
                samples: cli.samples,
                max_n: args.max_n,
            };
            let results = if let Some(dir) = &args.golden_dir {
                std::fs::create_dir_all(dir)
                    .map_err(|e| UsageError(format!("cannot create {}: {e}", dir.display())))?;
                let selected: Vec<(Suite, &str)> = match suite {
                    Suite::All => vec![
                        (Suite::Moments, "moments"),
                        (Suite::Stirling, "stirling"),
                        (Suite::Linearization, "linearization"),
                        (Suite::Asc, "asc"),
                        (Suite::Bijections, "bijections"),
                        (Suite::Classical, "classical"),
                    ],
                    Suite::Moments => vec![(suite, "moments")],
                    Suite::Stirling => vec![(suite, "stirling")],
                    Suite::Linearization => vec![(suite, "linearization")],
                    Suite::Asc => vec![(suite, "asc")],
                    Suite::Bijections => vec![(suite, "bijections")],
                    Suite::Classical => vec![(suite, "classical")],
                };
                let mut merged = Vec::new();
                for (s, name) in selected {
                    let r = run_suite(s, &config);
                    let rows = qlaguerre::verify::golden_rows(&r);
                    if rows.lines().count() > 1 {
                        std::fs::write(dir.join(format!("{name}.csv")), rows).map_err(|e| {
                            UsageError(format!("cannot write golden file: {e}"))
                        })?;
                    }
                    merged.extend(r);
                }
                merged.sort_by(|a, b| a.name.cmp(&b.name));
                merged
            } else {
                run_suite(suite, &config)
            };
            emit_checks(out, &results, cli.format, cli.seed);
            let all_pass = results.iter().all(|r| r.pass);
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn compute_moment(args: &MomentsArgs, cap: usize) -> Result<BiLaurent, RunError> {
    match args.family {
        Family::Laguerre => match args.method {
            MomentMethod::Enum => Ok(permutation_polynomial(args.n, cap)?),
            MomentMethod::Motzkin => Ok(moments_motzkin(
                args.n,
                &jacobi_for(&AscParams::laguerre())?,
            )),
            MomentMethod::Closed => Ok(moment_closed_laguerre(args.n)?),
            MomentMethod::Gf => Ok(moment_gf_truncated(&GfFamily::Laguerre, args.n)?
                .coeff(args.n)
                .clone()),
        },
        Family::Charlier => match args.method {
            MomentMethod::Enum => Err(UsageError(
                "the charlier family has no enumeration route; use motzkin, closed or gf".into(),
            )
            .into()),
            MomentMethod::Motzkin => Ok(moments_motzkin(
                args.n,
                &jacobi_for(&AscParams::charlier())?,
            )),
            MomentMethod::Closed => Ok(moment_closed_charlier(args.n)?),
            MomentMethod::Gf => Ok(moment_gf_truncated(&GfFamily::Charlier, args.n)?
                .coeff(args.n)
                .clone()),
        },
        Family::Asc => {
            let (alpha, beta, q) = point_params(&args.alpha, &args.beta, &args.q)?;
            if alpha == BigRational::from_integer(0.into()) {
                return Err(UsageError("alpha must be nonzero (y = 1/alpha^2)".into()).into());
            }
            let y = (&alpha * &alpha).recip();
            let big_b = &alpha * &beta;
            match args.method {
                MomentMethod::Enum => Err(UsageError(
                    "the asc family has no enumeration route; use motzkin, closed or gf".into(),
                )
                .into()),
                MomentMethod::Motzkin => {
                    let params = AscParams::at_point(y, big_b, q);
                    Ok(moments_motzkin(args.n, &jacobi_for(&params)?))
                }
                MomentMethod::Closed => Ok(BiLaurent::constant(asc_moment_explicit(
                    args.n, &y, &big_b, &q,
                )?)),
                MomentMethod::Gf => Ok(moment_gf_truncated(
                    &GfFamily::AscAt { y, big_b, q },
                    args.n,
                )?
                .coeff(args.n)
                .clone()),
            }
        }
    }
}

fn run_bijection(args: &BijectionArgs, out: &mut dyn Write) -> Result<(), RunError> {
    let sigma = Permutation::parse(&args.sigma)?;
    match args.map {
        MapKind::Phi => {
            let k = args
                .k
                .ok_or_else(|| UsageError("--map phi requires --k".into()))?;
            let image = bijection::phi(&sigma, k)?;
            writeln!(out, "{image}").ok();
            if args.stats {
                writeln!(
                    out,
                    "wex,cr before: {},{}  after: {},{}",
                    sigma.wex(),
                    sigma.cr(),
                    image.wex(),
                    image.cr()
                )
                .ok();
            }
            if args.decompose {
                let (l1, l2, l3, l4) = bijection::crossing_decomposition_l(&sigma, k)?;
                writeln!(out, "sigma,L1,L2,L3,L4").ok();
                writeln!(out, "\"{sigma}\",{l1},{l2},{l3},{l4}").ok();
            }
        }
        MapKind::Gamma => {
            let (n1, n2) = match (args.n1, args.n2) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(UsageError("--map gamma requires --n1 and --n2".into()).into()),
            };
            let image = bijection::gamma(&sigma, n1, n2)?;
            writeln!(out, "{image}").ok();
            if args.stats {
                writeln!(
                    out,
                    "wex,cr before: {},{}  after: {},{}",
                    sigma.wex(),
                    sigma.cr(),
                    image.wex(),
                    image.cr()
                )
                .ok();
            }
            if args.decompose {
                let g = bijection::crossing_decomposition_g(&sigma, n1, n2)?;
                writeln!(out, "sigma,G1,G2,G3,G4,G5").ok();
                writeln!(out, "\"{sigma}\",{},{},{},{},{}", g[0], g[1], g[2], g[3], g[4]).ok();
            }
        }
    }
    Ok(())
}

fn parse_blocks(s: &str) -> Result<BlockSpec, RunError> {
    let sizes = s
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|e| UsageError(format!("bad block size {tok:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BlockSpec::new(sizes)?)
}

fn point_params(
    alpha: &Option<String>,
    beta: &Option<String>,
    q: &Option<String>,
) -> Result<(BigRational, BigRational, BigRational), RunError> {
    match (alpha, beta, q) {
        (Some(a), Some(b), Some(qv)) => Ok((
            parse_rational(a)?,
            parse_rational(b)?,
            parse_rational(qv)?,
        )),
        _ => Err(UsageError("--alpha, --beta and --q are all required here".into()).into()),
    }
}

fn emit_poly(out: &mut dyn Write, poly: &BiLaurent, format: Format) {
    match format {
        Format::Text => {
            writeln!(out, "{}", poly.canonical_string()).ok();
        }
        Format::Json => {
            writeln!(out, "{}", poly.to_json()).ok();
        }
        Format::Csv => {
            writeln!(out, "y,q,coeff").ok();
            for (&(ey, eq), c) in poly.iter() {
                writeln!(out, "{ey},{eq},{c}").ok();
            }
        }
    }
}

fn emit_checks(out: &mut dyn Write, results: &[CheckResult], format: Format, seed: u64) {
    match format {
        Format::Text => {
            for r in results {
                writeln!(
                    out,
                    "{} {} {}",
                    r.name,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.detail
                )
                .ok();
            }
            let failed = results.iter().filter(|r| !r.pass).count();
            writeln!(
                out,
                "{} checks, {} failed (seed {seed})",
                results.len(),
                failed
            )
            .ok();
        }
        Format::Csv => {
            writeln!(out, "check,status,detail").ok();
            for r in results {
                writeln!(
                    out,
                    "\"{}\",{},\"{}\"",
                    r.name,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.detail.replace('"', "'")
                )
                .ok();
            }
        }
        Format::Json => {
            let items: Vec<String> = results
                .iter()
                .map(|r| {
                    format!(
                        "{{\"check\":{:?},\"status\":{:?},\"detail\":{:?}}}",
                        r.name,
                        if r.pass { "PASS" } else { "FAIL" },
                        r.detail
                    )
                })
                .collect();
            writeln!(out, "{{\"seed\":{seed},\"checks\":[{}]}}", items.join(",")).ok();
        }
    }
}

fn format_rat_poly(p: &[BigRational]) -> String {
    use num::{Signed, Zero};
    if p.iter().all(|c| c.is_zero()) {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = if neg { -c.clone() } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else if neg {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        s.push_str(&mag.to_string());
        if i == 1 {
            s.push_str("*x");
        } else if i > 1 {
            s.push_str(&format!("*x^{i}"));
        }
    }
    s
}
