//! A seeded stress batch: random decompositions, certificate verification,
//! and oracle cross-checks, all reproducible from the seed.
//!
//! Run with: cargo run --example stress_run

use laurent_goldbach::stress::{run_stress, StressConfig};

fn main() {
    let config = StressConfig { trials: 250, seed: 2024, ..StressConfig::default() };
    println!(
        "running {} trials (seed {}, exponents [{}, {}], <= {} terms, coefficients <= {})\n",
        config.trials,
        config.seed,
        config.exp_min,
        config.exp_max,
        config.max_terms,
        config.coeff_max
    );

    let report = run_stress(&config);
    println!("{report}");

    // the same config reproduces the same report, bit for bit
    assert_eq!(report, run_stress(&config));
    assert!(report.passed());
    println!("\nreproducible: yes");
}
