//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measurements. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; every tolerance is pinned in the assertions.

use std::time::{Duration, Instant};

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use laurent_goldbach::cert::{certify_irreducible, is_hyper_monolithic, verify_certificate};
use laurent_goldbach::decompose::{
    decompose, peel_units, split_hyper_monolithic, split_indices, DecomposeError,
};
use laurent_goldbach::oracle::{
    enumerate_two_irreducible_splits, is_irreducible_oracle, is_irreducible_oracle_with,
    is_monolithic_oracle, OracleBounds, OracleError, SemiringMode,
};
use laurent_goldbach::poly::{GapSequence, LaurentPoly};
use laurent_goldbach::primes::{nagura_prime_for, primes_up_to};
use laurent_goldbach::stress::{run_stress, StressConfig};
use laurent_goldbach::text::{format_poly, parse_poly};

fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(pairs.iter().copied()).unwrap()
}

fn worked_example() -> LaurentPoly {
    parse_poly("6x^7+3x^4+4x^3+7x+5x^-1+3x^-4+8x^-6").unwrap()
}

/// Criterion 1: the hyper-monolithic split of the seven-term example
/// reproduces the known parts bit-exactly, larger value first, in < 1 ms.
#[test]
fn criterion_01_golden_split() {
    let f = worked_example();
    let expected_first = poly(&[(7, 6), (1, 7), (-4, 3), (-6, 8)]);
    let expected_second = poly(&[(4, 3), (3, 4), (-1, 5)]);

    let (first, second) = split_hyper_monolithic(&f).unwrap();
    assert_eq!(first, expected_first);
    assert_eq!(second, expected_second);
    assert!(first.evaluate_at_one() >= second.evaluate_at_one());

    let mut best = Duration::MAX;
    for _ in 0..5 {
        let start = Instant::now();
        let _ = split_hyper_monolithic(&f).unwrap();
        best = best.min(start.elapsed());
    }
    assert!(best < Duration::from_millis(1), "split took {best:?}");
    println!("acceptance 1 (golden hyper-monolithic split): PASS ({best:?})");
}

/// Criterion 2: the driver decomposes the same example into the value-31 /
/// value-5 pair; certificates re-verify; the oracle confirms both parts
/// under raised caps, the large one within 60 s.
#[test]
fn criterion_02_golden_driver() {
    let f = worked_example();
    let result = decompose(&f).unwrap();
    assert_eq!(
        result.part_a,
        poly(&[(7, 4), (4, 3), (3, 4), (1, 6), (-1, 5), (-4, 2), (-6, 7)])
    );
    assert_eq!(result.part_b, poly(&[(7, 2), (1, 1), (-4, 1), (-6, 1)]));
    assert_eq!(result.part_a.evaluate_at_one_u64(), Some(31));
    assert_eq!(result.part_b.evaluate_at_one_u64(), Some(5));
    assert!(verify_certificate(&result.part_a, &result.cert_a));
    assert!(verify_certificate(&result.part_b, &result.cert_b));

    // the spans exceed the default degree cap, so both runs raise the caps
    let bounds = OracleBounds { max_value: 36, max_degree: 13 };
    assert_eq!(
        is_irreducible_oracle_with(&result.part_b, SemiringMode::LaurentUnits, &bounds),
        Ok(true)
    );
    let start = Instant::now();
    assert_eq!(
        is_irreducible_oracle_with(&result.part_a, SemiringMode::LaurentUnits, &bounds),
        Ok(true)
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "raised-cap oracle took {elapsed:?}");
    println!("acceptance 2 (golden driver run): PASS (value-31 oracle in {elapsed:?})");
}

/// Criterion 3: every polynomial with normalized exponents in [0,4],
/// f(1) in [4,12], and at least two terms decomposes into parts that sum
/// back and are both oracle-irreducible. Target < 5 minutes.
#[test]
fn criterion_03_exhaustive_small_family() {
    let start = Instant::now();
    let mut checked = 0u64;
    // coefficient vectors over exponents 0..=4, constant term >= 1
    let mut coeffs = [0i64; 5];
    fn walk(
        coeffs: &mut [i64; 5],
        index: usize,
        sum: i64,
        checked: &mut u64,
    ) {
        if index == 5 {
            let terms = coeffs.iter().filter(|&&c| c > 0).count();
            if (4..=12).contains(&sum) && terms >= 2 && coeffs[0] >= 1 {
                let f = LaurentPoly::from_terms(
                    coeffs.iter().enumerate().map(|(e, &c)| (e as i64, c)),
                )
                .unwrap();
                let result = decompose(&f)
                    .unwrap_or_else(|e| panic!("decompose failed on {f}: {e}"));
                assert_eq!(result.part_a.add(&result.part_b), f, "sum mismatch on {f}");
                for part in [&result.part_a, &result.part_b] {
                    assert_eq!(
                        is_irreducible_oracle(part, SemiringMode::LaurentUnits),
                        Ok(true),
                        "oracle rejected part {part} of {f}"
                    );
                }
                *checked += 1;
            }
            return;
        }
        for c in 0..=(12 - sum) {
            coeffs[index] = c;
            walk(coeffs, index + 1, sum + c, checked);
        }
        coeffs[index] = 0;
    }
    walk(&mut coeffs, 0, 0, &mut checked);
    let elapsed = start.elapsed();
    assert!(checked > 4000, "family unexpectedly small: {checked}");
    assert!(elapsed < Duration::from_secs(300), "exhaustive run took {elapsed:?}");
    println!(
        "acceptance 3 (exhaustive family, {checked} polynomials): PASS ({elapsed:?})"
    );
}

/// Criterion 4: on every polynomial with <= 5 terms, normalized span <= 8,
/// coefficients <= 3 (value <= 15 follows): hyper-monolithic implies
/// oracle-monolithic; (monolithic and gcd 1 and >1 term) iff
/// oracle-irreducible; every issued certificate is oracle-confirmed.
#[test]
fn criterion_04_criteria_oracle_agreement() {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut certified = 0u64;

    // supports: subsets of {0..8} that contain 0, up to 5 exponents
    let mut support = Vec::new();
    let mut stack = vec![0i64];
    fn supports(from: i64, stack: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        out.push(stack.clone());
        if stack.len() == 5 {
            return;
        }
        for e in from..=8 {
            stack.push(e);
            supports(e + 1, stack, out);
            stack.pop();
        }
    }
    supports(1, &mut stack, &mut support);

    for exponents in &support {
        let k = exponents.len();
        let mut assignment = vec![1u64; k];
        loop {
            let f = LaurentPoly::from_terms(
                exponents.iter().zip(&assignment).map(|(&e, &c)| (e, c as i64)),
            )
            .unwrap();
            let value = f.evaluate_at_one_u64().unwrap();
            assert!(value <= 15);
            checked += 1;

            let monolithic = is_monolithic_oracle(&f).unwrap();
            let irreducible = is_irreducible_oracle(&f, SemiringMode::LaurentUnits).unwrap();

            if is_hyper_monolithic(&f) {
                assert!(monolithic, "hyper-monolithic but not oracle-monolithic: {f}");
            }
            if f.support_size() > 1 {
                let gcd1 = f.coefficient_gcd().unwrap().is_one();
                assert_eq!(
                    monolithic && gcd1,
                    irreducible,
                    "criterion/oracle disagreement on {f}"
                );
            }
            if let Some(cert) = certify_irreducible(&f, false).unwrap() {
                assert!(irreducible, "certificate issued for oracle-reducible {f}");
                assert!(verify_certificate(&f, &cert));
                certified += 1;
            }

            // next coefficient assignment over [1,3]^k
            let mut i = 0;
            while i < k {
                if assignment[i] < 3 {
                    assignment[i] += 1;
                    break;
                }
                assignment[i] = 1;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(checked > 20_000, "family unexpectedly small: {checked}");
    println!(
        "acceptance 4 (criteria-oracle agreement, {checked} polynomials, {certified} certified): PASS ({elapsed:?})"
    );
}

/// Criterion 5: the splitting-configuration conditions hold for
/// split_indices on 10^4 seeded random gap sequences.
#[test]
fn criterion_05_splitting_configuration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for trial in 0..10_000 {
        let len = rng.gen_range(2..=12usize);
        let gaps: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=9i64)).collect();
        let si = split_indices(&GapSequence::new(gaps.clone())).unwrap();
        let (alpha, beta) = (si.alpha, si.beta);
        assert!(alpha < beta, "trial {trial}: condition 1 on {gaps:?}");
        let pivot = gaps[alpha].max(gaps[beta]);
        for (j, &g) in gaps.iter().enumerate() {
            if j < alpha || j > beta {
                assert!(g > pivot, "trial {trial}: condition 2 at {j} on {gaps:?}");
            }
        }
        let inside_smaller = gaps[alpha..=beta].iter().filter(|&&g| g < pivot).count();
        assert!(inside_smaller <= 1, "trial {trial}: condition 3 on {gaps:?}");
    }
    println!("acceptance 5 (splitting configuration, 10000 sequences): PASS");
}

/// Random hyper-monolithic polynomial with a forced coefficient-1 term
/// (the shape every pipeline peel call has; it also guarantees gcd 1).
fn random_peelable(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let n_terms = rng.gen_range(2..=6usize);
    let min_gap = rng.gen_range(1..=2i64);
    let front = rng.gen_bool(0.5);
    let mut gaps: Vec<i64> = (0..n_terms - 1)
        .map(|_| rng.gen_range(min_gap + 1..=min_gap + 3))
        .collect();
    if !gaps.is_empty() {
        if front {
            gaps[0] = min_gap;
        } else {
            *gaps.last_mut().unwrap() = min_gap;
        }
    }
    let start = rng.gen_range(-6..=6i64);
    let mut exponent = start;
    let mut pairs = Vec::with_capacity(n_terms);
    for i in 0..n_terms {
        pairs.push((exponent, rng.gen_range(1..=6i64)));
        if i < gaps.len() {
            exponent -= gaps[i];
        }
    }
    let unit_at = rng.gen_range(0..n_terms);
    pairs[unit_at].1 = 1;
    LaurentPoly::from_terms(pairs).unwrap()
}

/// Criterion 6: the peel contract holds on 10^4 seeded (g, amount) pairs
/// and the repair step never fails.
#[test]
fn criterion_06_peel_contract() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut oracle_covered = 0u64;
    for trial in 0..10_000u64 {
        let g = random_peelable(&mut rng);
        assert!(is_hyper_monolithic(&g), "generator bug at trial {trial}");
        assert!(g.coefficient_gcd().unwrap().is_one());
        let sigma = g.evaluate_at_one_u64().unwrap();
        let amount = rng.gen_range(0..=sigma - 2);

        let (kept, removed) = peel_units(&g, amount).unwrap_or_else(|e| {
            panic!("trial {trial}: peel({g}, {amount}) failed: {e}")
        });
        assert_eq!(kept.add(&removed), g, "trial {trial}");
        assert_eq!(removed.evaluate_at_one_u64(), Some(amount), "trial {trial}");
        assert!(kept.support_size() >= 2, "trial {trial}");
        assert!(is_hyper_monolithic(&kept), "trial {trial}: kept {kept} from {g}");
        assert!(kept.coefficient_gcd().unwrap().is_one(), "trial {trial}");

        match is_irreducible_oracle(&kept, SemiringMode::LaurentUnits) {
            Ok(verdict) => {
                assert!(verdict, "trial {trial}: oracle rejected kept part {kept}");
                oracle_covered += 1;
            }
            Err(OracleError::SizeLimit { .. }) => {}
            Err(e) => panic!("trial {trial}: oracle error {e}"),
        }
    }
    println!(
        "acceptance 6 (peel contract, 10000 trials, {oracle_covered} oracle-checked): PASS"
    );
}

/// Criterion 7: a prime exists in (n, 6n/5) for every n in [25, 50000], and
/// the window prime satisfies its guarantees for every v in [32, 50000].
/// Target < 10 s.
#[test]
fn criterion_07_prime_window() {
    let start = Instant::now();
    let primes = primes_up_to(60_100);
    for n in 25..=50_000u64 {
        let p = primes[primes.partition_point(|&q| q <= n)];
        assert!(p > n);
        assert!(5 * p < 6 * n, "no prime in ({n}, 6*{n}/5): next is {p}");
    }
    for v in 32..=50_000u64 {
        let r = nagura_prime_for(v).unwrap_or_else(|e| panic!("window failed at {v}: {e}"));
        assert!(6 * (r + 1) >= 5 * v, "lower window bound failed at {v} (r = {r})");
        assert!(r <= v - 2, "upper window bound failed at {v} (r = {r})");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "window checks took {elapsed:?}");
    println!("acceptance 7 (prime windows to 50000): PASS ({elapsed:?})");
}

/// Criterion 8: x^k + ... + x has no two-irreducible sum in N0[x] for
/// k in 2..=5, while the Laurent driver succeeds for k in {4, 5}. < 1 s.
#[test]
fn criterion_08_poly_mode_counterexample() {
    let start = Instant::now();
    for k in 2..=5i64 {
        let f = LaurentPoly::from_terms((1..=k).map(|e| (e, 1))).unwrap();
        let splits = enumerate_two_irreducible_splits(&f, SemiringMode::PolyUnits).unwrap();
        assert!(splits.is_empty(), "k = {k}: found {splits:?}");
        if k >= 4 {
            let result = decompose(&f).unwrap();
            assert_eq!(result.part_a.add(&result.part_b), f);
        } else {
            assert!(matches!(decompose(&f), Err(DecomposeError::NotCovered { .. })));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "counterexample checks took {elapsed:?}");
    println!("acceptance 8 (N0[x] counterexample, k = 2..5): PASS ({elapsed:?})");
}

/// Criterion 9: 1000 seeded stress trials pass with full oracle coverage of
/// every trial with f(1) <= 24, and the run reproduces bit-for-bit.
#[test]
fn criterion_09_stress() {
    let config = StressConfig::default();
    assert_eq!(
        (config.trials, config.seed, config.max_terms, config.coeff_max),
        (1000, 42, 8, 6)
    );
    assert_eq!((config.exp_min, config.exp_max), (-8, 8));
    assert_eq!((config.oracle_value_cap, config.value_max), (24, 40));

    let report = run_stress(&config);
    assert!(report.passed(), "stress failures: {report}");
    assert_eq!(report.trials, 1000);
    assert!(
        report.oracle_fraction() >= 0.30,
        "oracle coverage too low: {:.3}",
        report.oracle_fraction()
    );
    let again = run_stress(&config);
    assert_eq!(report, again, "stress run is not reproducible");
    println!(
        "acceptance 9 (stress, 1000 trials, {:.1}% oracle-checked): PASS",
        100.0 * report.oracle_fraction()
    );
}

/// Criterion 10: parse/format round-trip on 10^4 random polynomials, and
/// decompose commutes with multiplication by units x^k.
#[test]
fn criterion_10_roundtrip_and_associates() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=8usize);
        let mut pairs = Vec::with_capacity(n);
        let mut used = std::collections::BTreeSet::new();
        while pairs.len() < n {
            let e = rng.gen_range(-9..=9i64);
            if used.insert(e) {
                pairs.push((e, rng.gen_range(1..=9i64)));
            }
        }
        let f = LaurentPoly::from_terms(pairs).unwrap();
        let text = format_poly(&f);
        assert_eq!(parse_poly(&text).unwrap(), f, "round-trip failed on {text}");
    }

    let mut invariance_checked = 0u64;
    while invariance_checked < 500 {
        let config = StressConfig { seed: 1010, ..StressConfig::default() };
        let f = laurent_goldbach::stress::generate_input(&config, invariance_checked);
        let k = rng.gen_range(-5..=5i64);
        let base = decompose(&f).unwrap();
        let shifted = decompose(&f.shifted(k)).unwrap();
        assert_eq!(shifted.part_a, base.part_a.shifted(k), "A parts differ for {f}, k={k}");
        assert_eq!(shifted.part_b, base.part_b.shifted(k), "B parts differ for {f}, k={k}");
        invariance_checked += 1;
    }
    println!(
        "acceptance 10 (round-trip 10000, associate invariance {invariance_checked}): PASS"
    );
}
