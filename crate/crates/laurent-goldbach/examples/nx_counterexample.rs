//! Why the two-irreducibles statement needs Laurent polynomials.
//!
//! In N0[x] (only 1 is a unit), the polynomial x^k + ... + x is never a
//! sum of two irreducibles: any candidate part with min exponent >= 1 and
//! value >= 2 is divisible by x with a non-unit cofactor, so the only
//! irreducible part available is x itself — and x + x != x^k + ... + x
//! for k >= 3. The exhaustive oracle confirms this for k = 2..=5; in
//! N0[x^±1], where every x^j is a unit, the same inputs decompose fine
//! once f(1) > 3.
//!
//! Run with: cargo run --example nx_counterexample

use laurent_goldbach::oracle::{enumerate_two_irreducible_splits, SemiringMode};
use laurent_goldbach::{decompose, format_poly, LaurentPoly};

fn main() {
    for k in 2..=5i64 {
        let f = LaurentPoly::from_terms((1..=k).map(|e| (e, 1))).unwrap();
        let text = format_poly(&f);

        let splits = enumerate_two_irreducible_splits(&f, SemiringMode::PolyUnits).unwrap();
        println!("{text}");
        println!("  two-irreducible splits in N0[x]: {}", splits.len());
        assert!(splits.is_empty());

        match decompose(&f) {
            Ok(r) => println!(
                "  in N0[x^±1]: ({}) + ({})",
                format_poly(&r.part_a),
                format_poly(&r.part_b)
            ),
            Err(e) => println!("  in N0[x^±1]: {e}"),
        }
        println!();
    }

    // the same enumeration run in the Laurent regime shows what changed:
    // parts like x^4 + x^3 become associates of x + 1
    let f = LaurentPoly::from_terms((1..=4).map(|e| (e, 1))).unwrap();
    let splits = enumerate_two_irreducible_splits(&f, SemiringMode::LaurentUnits).unwrap();
    println!("{} in N0[x^±1] has {} splits:", format_poly(&f), splits.len());
    for (a, b) in splits {
        println!("  ({}) + ({})", format_poly(&a), format_poly(&b));
    }
}
