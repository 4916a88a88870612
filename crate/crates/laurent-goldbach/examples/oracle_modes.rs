//! The brute-force oracle and its two unit regimes.
//!
//! This example demonstrates:
//! - Exhaustive factorization witnesses
//! - How the unit regime changes what "irreducible" means
//! - The monolithic test (every factorization has a monomial factor)
//! - Enumerating all ways to write f as a sum of two irreducibles
//!
//! Run with: cargo run --example oracle_modes

use laurent_goldbach::oracle::{
    enumerate_two_irreducible_splits, find_factorization, is_irreducible_oracle,
    is_monolithic_oracle, FactorizationWitness, SemiringMode,
};
use laurent_goldbach::{format_poly, parse_poly};

fn main() {
    println!("=== The Factorization Oracle ===\n");

    println!("--- Witnesses ---\n");
    for text in ["x^2+2x+1", "2x^2+2x", "6x^2+7x+2", "x^2+x+1"] {
        let f = parse_poly(text).unwrap();
        match find_factorization(&f, SemiringMode::LaurentUnits).unwrap() {
            FactorizationWitness::Factors { left, right } => {
                println!("{text} = ({}) * ({})", format_poly(&left), format_poly(&right));
            }
            FactorizationWitness::Exhausted { bounds } => {
                println!(
                    "{text}: exhausted (no factor with value <= {}, degree <= {})",
                    bounds.max_value, bounds.max_degree
                );
            }
        }
    }

    println!("\n--- Unit regimes ---\n");
    // x^2 is a unit of N0[x^±1] but a product of non-units in N0[x]
    let x2 = parse_poly("x^2").unwrap();
    println!(
        "x^2: Laurent-irreducible = {} (it is a unit there)",
        is_irreducible_oracle(&x2, SemiringMode::LaurentUnits).unwrap()
    );
    println!(
        "x^2: poly-irreducible    = {} (x^2 = x * x)",
        is_irreducible_oracle(&x2, SemiringMode::PolyUnits).unwrap()
    );
    match find_factorization(&x2, SemiringMode::PolyUnits).unwrap() {
        FactorizationWitness::Factors { left, right } => {
            println!("x^2 in N0[x]: ({}) * ({})", format_poly(&left), format_poly(&right))
        }
        _ => unreachable!(),
    }

    // constants behave like plain integers in both regimes
    for c in ["7", "6"] {
        let f = parse_poly(c).unwrap();
        println!(
            "{c}: Laurent {}, poly {}",
            is_irreducible_oracle(&f, SemiringMode::LaurentUnits).unwrap(),
            is_irreducible_oracle(&f, SemiringMode::PolyUnits).unwrap()
        );
    }

    println!("\n--- Monolithic polynomials ---\n");
    for text in ["x^2+2x+1", "2x^2+2", "4x^7+3x^2+x"] {
        let f = parse_poly(text).unwrap();
        println!("{text}: monolithic = {}", is_monolithic_oracle(&f).unwrap());
    }

    println!("\n--- All two-irreducible splits ---\n");
    let f = parse_poly("x^4+x^3+x^2+x").unwrap();
    let splits = enumerate_two_irreducible_splits(&f, SemiringMode::LaurentUnits).unwrap();
    println!("{} has {} splits in N0[x^±1]:", format_poly(&f), splits.len());
    for (a, b) in &splits {
        println!("  ({}) + ({})", format_poly(a), format_poly(b));
    }
}
