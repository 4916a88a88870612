//! Command-line front end. One polynomial per invocation; batch via shell.
//!
//! Exit codes: 0 success, 1 parse error, 2 precondition violation,
//! 3 internal invariant failure (or a failed verification/stress run).

use std::io::Read;
use std::panic::AssertUnwindSafe;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cert::{certify_irreducible_with, CertError, IrreducibilityCertificate};
use crate::decompose::{decompose, DecomposeError, DecompositionResult};
use crate::oracle::{
    enumerate_two_irreducible_splits, find_factorization_with, FactorizationWitness,
    OracleBounds, OracleError, SemiringMode,
};
use crate::poly::LaurentPoly;
use crate::report::{report_for, verify_report, DecompositionReport};
use crate::stress::{run_stress, StressConfig};
use crate::text::{format_poly, parse_poly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Environment variable overriding the oracle's value cap.
pub const ORACLE_CAP_ENV: &str = "LG_ORACLE_CAP";

#[derive(Parser)]
#[command(
    name = "lg",
    version,
    about = "Write Laurent polynomials with positive integer coefficients as sums of two irreducibles"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of human-readable text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Laurent,
    Poly,
}

impl From<ModeArg> for SemiringMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Laurent => SemiringMode::LaurentUnits,
            ModeArg::Poly => SemiringMode::PolyUnits,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a polynomial into a sum of two irreducibles
    Decompose { expr: String },
    /// Produce an irreducibility certificate (criteria first, oracle last)
    Certify { expr: String },
    /// Check irreducibility criteria and optionally the brute-force oracle
    Check {
        expr: String,
        /// Also run the exhaustive oracle
        #[arg(long)]
        oracle: bool,
        /// Unit regime for the oracle
        #[arg(long, value_enum, default_value_t = ModeArg::Laurent)]
        mode: ModeArg,
    },
    /// Re-verify a decomposition report (a JSON file path, or '-' for stdin)
    Verify { path: String },
    /// Run seeded random decompositions with oracle cross-checks
    Stress {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_terms: usize,
        #[arg(long, default_value_t = 6)]
        coeff_max: u64,
        #[arg(long, default_value_t = -8, allow_negative_numbers = true)]
        exp_min: i64,
        #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
        exp_max: i64,
        /// Oracle value cap (defaults to LG_ORACLE_CAP or 24)
        #[arg(long)]
        oracle_cap: Option<u64>,
    },
    /// Show that x^k + ... + x is not a sum of two irreducibles in N0[x]
    DemoNx,
}

fn env_oracle_cap() -> u64 {
    std::env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or_else(|| OracleBounds::default().max_value)
}

/// Oracle bounds for single-polynomial commands: the value cap comes from
/// LG_ORACLE_CAP, the degree cap stretches to the input's span so a wide
/// but small-valued polynomial is still checkable.
fn bounds_for(f: &LaurentPoly) -> OracleBounds {
    let span = match (f.max_exponent(), f.min_exponent()) {
        (Some(max), Some(min)) => max - min,
        _ => 0,
    };
    OracleBounds {
        max_value: env_oracle_cap(),
        max_degree: span.max(OracleBounds::default().max_degree),
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match std::panic::catch_unwind(AssertUnwindSafe(|| execute(&cli))) {
        Ok(code) => code,
        Err(_) => {
            eprintln!("internal invariant failure");
            EXIT_INTERNAL
        }
    }
}

fn decompose_exit_code(e: &DecomposeError) -> i32 {
    match e {
        DecomposeError::RepairFailed => EXIT_INTERNAL,
        _ => EXIT_PRECONDITION,
    }
}

fn describe_certificate(cert: &IrreducibilityCertificate) -> String {
    match cert {
        IrreducibilityCertificate::PrimeEvaluation { prime } => {
            format!("prime_evaluation(prime={prime})")
        }
        IrreducibilityCertificate::HyperMonolithicGcd1 => "hyper_monolithic_gcd1".to_string(),
        IrreducibilityCertificate::QuadrinomialGap { exponents } => {
            format!("quadrinomial_gap(exponents={exponents:?})")
        }
        IrreducibilityCertificate::OracleExhaustion { max_value, max_degree } => {
            format!("oracle_exhaustion(value<={max_value}, degree<={max_degree})")
        }
    }
}

fn print_decomposition(f: &LaurentPoly, result: &DecompositionResult) {
    println!("input:  {}", format_poly(f));
    match result.trace.prime {
        Some(p) => println!("branch: {} (prime {p})", result.trace.branch.as_str()),
        None => println!("branch: {}", result.trace.branch.as_str()),
    }
    println!(
        "part A: {}  [{}]",
        format_poly(&result.part_a),
        describe_certificate(&result.cert_a)
    );
    println!(
        "part B: {}  [{}]",
        format_poly(&result.part_b),
        describe_certificate(&result.cert_b)
    );
}

fn parse_or_report(expr: &str) -> Result<LaurentPoly, i32> {
    parse_poly(expr).map_err(|e| {
        eprintln!("{e}");
        EXIT_PARSE
    })
}

fn execute(cli: &Cli) -> i32 {
    match &cli.command {
        Command::Decompose { expr } => {
            let f = match parse_or_report(expr) {
                Ok(f) => f,
                Err(code) => return code,
            };
            match decompose(&f) {
                Ok(result) => {
                    if cli.json {
                        let report = report_for(&f, &result);
                        println!("{}", serde_json::to_string_pretty(&report).unwrap());
                    } else {
                        print_decomposition(&f, &result);
                    }
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("{e}");
                    decompose_exit_code(&e)
                }
            }
        }

        Command::Certify { expr } => {
            let f = match parse_or_report(expr) {
                Ok(f) => f,
                Err(code) => return code,
            };
            match certify_irreducible_with(&f, true, &bounds_for(&f)) {
                Ok(cert) => {
                    if cli.json {
                        let json = serde_json::json!({
                            "schema": 1,
                            "input": format_poly(&f),
                            "certificate": cert,
                        });
                        println!("{}", serde_json::to_string_pretty(&json).unwrap());
                    } else {
                        match &cert {
                            Some(c) => println!("certificate: {}", describe_certificate(c)),
                            None => println!("no certificate applies (irreducibility unknown)"),
                        }
                    }
                    EXIT_OK
                }
                Err(CertError::ZeroPolynomial) => {
                    eprintln!("cannot certify the zero polynomial");
                    EXIT_PRECONDITION
                }
                Err(e) => {
                    eprintln!("{e}");
                    EXIT_PRECONDITION
                }
            }
        }

        Command::Check { expr, oracle, mode } => {
            let f = match parse_or_report(expr) {
                Ok(f) => f,
                Err(code) => return code,
            };
            if *mode == ModeArg::Poly && !oracle {
                eprintln!("--mode poly applies to the oracle; pass --oracle as well");
                return EXIT_PRECONDITION;
            }
            let criterion = match certify_irreducible_with(&f, false, &bounds_for(&f)) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("{e}");
                    return EXIT_PRECONDITION;
                }
            };
            let mut oracle_json = serde_json::Value::Null;
            if *oracle {
                let semiring: SemiringMode = (*mode).into();
                let is_unit = match semiring {
                    SemiringMode::LaurentUnits => f.is_laurent_unit(),
                    SemiringMode::PolyUnits => f == LaurentPoly::one(),
                };
                let verdict = if is_unit {
                    ("unit", None)
                } else {
                    match find_factorization_with(&f, semiring, &bounds_for(&f)) {
                        Ok(FactorizationWitness::Exhausted { .. }) => ("irreducible", None),
                        Ok(FactorizationWitness::Factors { left, right }) => {
                            ("reducible", Some((left, right)))
                        }
                        Err(e @ OracleError::NegativeExponent) => {
                            eprintln!("{e}");
                            return EXIT_PRECONDITION;
                        }
                        Err(e) => {
                            eprintln!("{e}");
                            return EXIT_PRECONDITION;
                        }
                    }
                };
                if cli.json {
                    oracle_json = serde_json::json!({
                        "mode": match semiring {
                            SemiringMode::LaurentUnits => "laurent",
                            SemiringMode::PolyUnits => "poly",
                        },
                        "verdict": verdict.0,
                        "witness": verdict.1.as_ref().map(|(l, r)| [format_poly(l), format_poly(r)]),
                    });
                } else {
                    match &verdict.1 {
                        Some((l, r)) => println!(
                            "oracle ({:?}): reducible, ({}) * ({})",
                            mode,
                            format_poly(l),
                            format_poly(r)
                        ),
                        None => println!("oracle ({:?}): {}", mode, verdict.0),
                    }
                }
            }
            if cli.json {
                let json = serde_json::json!({
                    "schema": 1,
                    "input": format_poly(&f),
                    "criterion": criterion,
                    "oracle": oracle_json,
                });
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
            } else {
                match &criterion {
                    Some(c) => println!("criterion: irreducible [{}]", describe_certificate(c)),
                    None => println!("criterion: none applies"),
                }
            }
            EXIT_OK
        }

        Command::Verify { path } => {
            let content = if path == "-" {
                let mut buffer = String::new();
                if let Err(e) = std::io::stdin().read_to_string(&mut buffer) {
                    eprintln!("cannot read stdin: {e}");
                    return EXIT_PARSE;
                }
                buffer
            } else {
                match std::fs::read_to_string(path) {
                    Ok(c) => c,
                    Err(e) => {
                        eprintln!("cannot read {path}: {e}");
                        return EXIT_PARSE;
                    }
                }
            };
            let report: DecompositionReport = match serde_json::from_str(&content) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("invalid report JSON: {e}");
                    return EXIT_PARSE;
                }
            };
            match verify_report(&report) {
                Ok(()) => {
                    println!("VALID");
                    EXIT_OK
                }
                Err(e) => {
                    println!("INVALID: {e}");
                    EXIT_INTERNAL
                }
            }
        }

        Command::Stress {
            trials,
            seed,
            max_terms,
            coeff_max,
            exp_min,
            exp_max,
            oracle_cap,
        } => {
            let config = StressConfig {
                trials: *trials,
                seed: *seed,
                max_terms: *max_terms,
                coeff_max: *coeff_max,
                exp_min: *exp_min,
                exp_max: *exp_max,
                oracle_value_cap: oracle_cap.unwrap_or_else(env_oracle_cap),
                ..StressConfig::default()
            };
            let report = run_stress(&config);
            if cli.json {
                let json = serde_json::json!({
                    "schema": 1,
                    "trials": report.trials,
                    "seed": config.seed,
                    "oracle_checked": report.oracle_checked,
                    "branches": report.branch_counts,
                    "failures": report.failures.iter().map(|f| serde_json::json!({
                        "trial": f.trial,
                        "input": f.input,
                        "message": f.message,
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
            } else {
                println!("{report}");
            }
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            }
        }

        Command::DemoNx => {
            let mut ok = true;
            for k in 2..=5i64 {
                let f = LaurentPoly::from_terms((1..=k).map(|e| (e, 1))).unwrap();
                match enumerate_two_irreducible_splits(&f, SemiringMode::PolyUnits) {
                    Ok(splits) if splits.is_empty() => {
                        println!(
                            "{}: no sum of two irreducibles exists in N0[x]",
                            format_poly(&f)
                        );
                    }
                    Ok(splits) => {
                        println!("{}: unexpectedly found {} splits", format_poly(&f), splits.len());
                        ok = false;
                    }
                    Err(e) => {
                        println!("{}: oracle error: {e}", format_poly(&f));
                        ok = false;
                    }
                }
                if k >= 4 {
                    match decompose(&f) {
                        Ok(r) => println!(
                            "    ...but in N0[x^±1]: ({}) + ({})",
                            format_poly(&r.part_a),
                            format_poly(&r.part_b)
                        ),
                        Err(e) => {
                            println!("    ...Laurent decomposition failed: {e}");
                            ok = false;
                        }
                    }
                } else {
                    println!("    (f(1) = {k} <= 3: not decomposable in N0[x^±1] either)");
                }
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            }
        }
    }
}
