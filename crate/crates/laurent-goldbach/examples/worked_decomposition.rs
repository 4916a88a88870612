//! A full trace of the pipeline on a seven-term Laurent polynomial.
//!
//! Walks every stage by hand: gap sequence, splitting indices, the
//! hyper-monolithic split, minimum-coefficient reduction, unit peeling,
//! and the final certified decomposition, cross-checked with the oracle.
//!
//! Run with: cargo run --example worked_decomposition

use laurent_goldbach::decompose::{peel_units, split_hyper_monolithic, split_indices, split_plan};
use laurent_goldbach::oracle::{is_irreducible_oracle_with, OracleBounds, SemiringMode};
use laurent_goldbach::primes::nagura_prime_for;
use laurent_goldbach::{decompose, format_poly, parse_poly};

fn main() {
    let f = parse_poly("6x^7+3x^4+4x^3+7x+5x^-1+3x^-4+8x^-6").unwrap();
    println!("f = {}", format_poly(&f));
    println!("f(1) = {}\n", f.evaluate_at_one());

    // --- Stage 1: gaps and splitting indices ---
    let gaps = f.gaps().unwrap();
    println!("gap sequence: {:?}", gaps.as_slice());
    let si = split_indices(&gaps).unwrap();
    println!("splitting indices: alpha = {}, beta = {}", si.alpha, si.beta);
    let (_, plan) = split_plan(&f).unwrap();
    println!("index partition: S_g = {:?}, S_h = {:?}\n", plan.s_g, plan.s_h);

    // --- Stage 2: the hyper-monolithic split ---
    let (g, h) = split_hyper_monolithic(&f).unwrap();
    println!("split: g = {}  (value {})", format_poly(&g), g.evaluate_at_one());
    println!("       h = {}  (value {})\n", format_poly(&h), h.evaluate_at_one());

    // --- Stage 3: prime selection in the window ---
    let value = f.evaluate_at_one_u64().unwrap();
    let p = nagura_prime_for(value).unwrap();
    println!("window prime for {value}: p = {p}  (5*{value}/6 - 1 <= {p} <= {value} - 2)\n");

    // --- Stage 4: reduce the minimum coefficient, then peel ---
    let (_, k_j, c_j) = g.min_coefficient_term().unwrap();
    println!("minimum coefficient of g: {c_j} at x^{k_j}");
    let reduced = g
        .subtract_checked(&laurent_goldbach::LaurentPoly::from_terms([(k_j, 2)]).unwrap())
        .unwrap();
    println!("g' = g - 2x^{k_j} = {}", format_poly(&reduced));
    let amount = p - h.evaluate_at_one_u64().unwrap() - 3 + 1;
    println!("peel amount: {amount}");
    let (kept, removed) = peel_units(&reduced, amount).unwrap();
    println!("peeled: kept = {}  (value {})", format_poly(&kept), kept.evaluate_at_one());
    println!("        removed = {}\n", format_poly(&removed));

    // --- Stage 5: the driver reproduces the same result ---
    let result = decompose(&f).unwrap();
    println!("decompose(f):");
    println!("  A = {}  (value {})", format_poly(&result.part_a), result.part_a.evaluate_at_one());
    println!("  B = {}  (value {})", format_poly(&result.part_b), result.part_b.evaluate_at_one());
    println!("  certificates: {:?}, {:?}", result.cert_a, result.cert_b);
    assert_eq!(result.part_b, kept);
    assert_eq!(result.part_a.add(&result.part_b), f);

    // --- Stage 6: oracle confirmation (the spans need a raised degree cap) ---
    let bounds = OracleBounds { max_value: 36, max_degree: 13 };
    for (name, part) in [("A", &result.part_a), ("B", &result.part_b)] {
        let verdict = is_irreducible_oracle_with(part, SemiringMode::LaurentUnits, &bounds).unwrap();
        println!("oracle on part {name}: irreducible = {verdict}");
        assert!(verdict);
    }
    println!("\nall stages agree.");
}
