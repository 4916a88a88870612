//! Seeded random validation of the decomposition pipeline.
//!
//! Each trial draws its randomness from a counter-based stream keyed by
//! (seed, trial index), so trials are order-independent and any failure
//! reproduces from the printed seed alone.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cert::verify_certificate;
use crate::decompose::decompose;
use crate::oracle::{is_irreducible_oracle_with, OracleBounds};
use crate::poly::LaurentPoly;
use crate::text::format_poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StressConfig {
    pub trials: u64,
    pub seed: u64,
    pub max_terms: usize,
    pub coeff_max: u64,
    pub exp_min: i64,
    pub exp_max: i64,
    pub oracle_value_cap: u64,
    /// Generated polynomials keep f(1) in (3, value_max].
    pub value_max: u64,
}

impl Default for StressConfig {
    fn default() -> Self {
        StressConfig {
            trials: 1000,
            seed: 42,
            max_terms: 8,
            coeff_max: 6,
            exp_min: -8,
            exp_max: 8,
            oracle_value_cap: 24,
            value_max: 40,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StressFailure {
    pub trial: u64,
    pub input: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StressReport {
    pub config: StressConfig,
    pub trials: u64,
    pub oracle_checked: u64,
    pub branch_counts: BTreeMap<String, u64>,
    pub failures: Vec<StressFailure>,
}

impl StressReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Fraction of trials that got the full oracle cross-check.
    pub fn oracle_fraction(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.oracle_checked as f64 / self.trials as f64
        }
    }
}

impl fmt::Display for StressReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trials: {} (seed {})", self.trials, self.config.seed)?;
        writeln!(
            f,
            "oracle cross-checked: {} ({:.1}%)",
            self.oracle_checked,
            100.0 * self.oracle_fraction()
        )?;
        writeln!(f, "branches:")?;
        for (branch, count) in &self.branch_counts {
            writeln!(f, "  {branch}: {count}")?;
        }
        if self.failures.is_empty() {
            write!(f, "failures: 0")?;
        } else {
            writeln!(f, "failures: {}", self.failures.len())?;
            for failure in &self.failures {
                writeln!(f, "  trial {}: {} ({})", failure.trial, failure.input, failure.message)?;
            }
        }
        Ok(())
    }
}

/// Draws the trial's polynomial: 2..=max_terms distinct exponents in
/// [exp_min, exp_max], coefficients in [1, coeff_max], resampled until
/// 3 < f(1) <= value_max.
pub fn generate_input(config: &StressConfig, trial: u64) -> LaurentPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial);
    let exponent_pool: Vec<i64> = (config.exp_min..=config.exp_max).collect();
    let max_terms = config.max_terms.min(exponent_pool.len()).max(2);
    loop {
        let n = rng.gen_range(2..=max_terms);
        let pairs: Vec<(i64, i64)> = exponent_pool
            .choose_multiple(&mut rng, n)
            .map(|&e| (e, rng.gen_range(1..=config.coeff_max) as i64))
            .collect();
        let f = LaurentPoly::from_terms(pairs).expect("positive coefficients");
        let value = f.evaluate_at_one_u64().expect("small value");
        if value > 3 && value <= config.value_max {
            return f;
        }
    }
}

/// Runs `config.trials` seeded decompositions, verifying part sums and
/// certificates on every trial and cross-checking both parts against the
/// oracle whenever f(1) is within the oracle value cap.
pub fn run_stress(config: &StressConfig) -> StressReport {
    let oracle_bounds = OracleBounds {
        max_value: config.oracle_value_cap,
        max_degree: (config.exp_max - config.exp_min).max(12),
    };
    let mut report = StressReport {
        config: *config,
        trials: config.trials,
        oracle_checked: 0,
        branch_counts: BTreeMap::new(),
        failures: Vec::new(),
    };

    for trial in 0..config.trials {
        let f = generate_input(config, trial);
        let input = format_poly(&f);
        let fail = |message: String, failures: &mut Vec<StressFailure>| {
            failures.push(StressFailure { trial, input: input.clone(), message });
        };

        let result = match decompose(&f) {
            Ok(r) => r,
            Err(e) => {
                fail(format!("decompose failed: {e}"), &mut report.failures);
                continue;
            }
        };
        *report
            .branch_counts
            .entry(result.trace.branch.as_str().to_string())
            .or_insert(0) += 1;

        if result.part_a.add(&result.part_b) != f {
            fail("parts do not sum to the input".to_string(), &mut report.failures);
            continue;
        }
        if !verify_certificate(&result.part_a, &result.cert_a) {
            fail("certificate A does not verify".to_string(), &mut report.failures);
            continue;
        }
        if !verify_certificate(&result.part_b, &result.cert_b) {
            fail("certificate B does not verify".to_string(), &mut report.failures);
            continue;
        }

        let value = f.evaluate_at_one_u64().expect("small value");
        if value <= config.oracle_value_cap {
            report.oracle_checked += 1;
            for (name, part) in [("A", &result.part_a), ("B", &result.part_b)] {
                match is_irreducible_oracle_with(
                    part,
                    crate::oracle::SemiringMode::LaurentUnits,
                    &oracle_bounds,
                ) {
                    Ok(true) => {}
                    Ok(false) => {
                        fail(format!("oracle found part {name} reducible"), &mut report.failures)
                    }
                    Err(e) => fail(format!("oracle error on part {name}: {e}"), &mut report.failures),
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_inputs_respect_the_config() {
        let config = StressConfig { trials: 50, ..StressConfig::default() };
        for trial in 0..config.trials {
            let f = generate_input(&config, trial);
            let value = f.evaluate_at_one_u64().unwrap();
            assert!(value > 3 && value <= config.value_max);
            assert!(f.support_size() >= 2 && f.support_size() <= config.max_terms);
            assert!(f.exponents().all(|e| (config.exp_min..=config.exp_max).contains(&e)));
        }
    }

    #[test]
    fn trials_are_stream_keyed_and_reproducible() {
        let config = StressConfig::default();
        for trial in [0u64, 7, 93] {
            assert_eq!(generate_input(&config, trial), generate_input(&config, trial));
        }
        // different trials draw different polynomials (not a guarantee in
        // general, but it holds for this seed and catches stream mix-ups)
        assert_ne!(generate_input(&config, 0), generate_input(&config, 1));
    }

    #[test]
    fn small_run_passes() {
        let config = StressConfig { trials: 40, ..StressConfig::default() };
        let report = run_stress(&config);
        assert!(report.passed(), "{report}");
        assert_eq!(report.trials, 40);
    }

    #[test]
    fn zero_trials_is_an_empty_report() {
        let report = run_stress(&StressConfig { trials: 0, ..StressConfig::default() });
        assert!(report.passed());
        assert_eq!(report.trials, 0);
        assert_eq!(report.oracle_checked, 0);
        assert!(report.branch_counts.is_empty());
    }
}
