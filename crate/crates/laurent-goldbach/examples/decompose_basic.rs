//! Decomposing polynomials into sums of two irreducibles.
//!
//! This example demonstrates:
//! - Parsing a polynomial from the text grammar
//! - Running the decomposition driver
//! - Inspecting the branch, parts, and certificates
//!
//! Run with: cargo run --example decompose_basic

use laurent_goldbach::{decompose, format_poly, parse_poly};

fn main() {
    println!("=== Sums of Two Irreducibles in N0[x^±1] ===\n");

    // one input per pipeline branch
    let inputs = [
        ("5x+2", "a binomial"),
        ("x^4+x^3+x^2+x", "f(1) = 4 = 2 + 2, a prime pair"),
        ("2x^5+2x^4+2x^3+2x^2+2x+1", "f(1) = 11, no prime pair exists"),
        ("4x^4+4x^3+4x^2+4x+4+4x^-1+4x^-2+x^-3", "f(1) = 29, the bespoke case"),
        ("6x^7+3x^4+4x^3+7x+5x^-1+3x^-4+8x^-6", "f(1) = 36, the prime-window case"),
    ];

    for (text, note) in inputs {
        let f = parse_poly(text).expect("inputs are grammar-valid");
        let result = decompose(&f).expect("all inputs satisfy f(1) > 3 with > 1 term");

        println!("f = {text}");
        println!("  ({note})");
        match result.trace.prime {
            Some(p) => println!("  branch: {} with prime {p}", result.trace.branch.as_str()),
            None => println!("  branch: {}", result.trace.branch.as_str()),
        }
        println!(
            "  f = [{}] + [{}]",
            format_poly(&result.part_a),
            format_poly(&result.part_b)
        );
        println!(
            "  values: {} + {} = {}",
            result.part_a.evaluate_at_one(),
            result.part_b.evaluate_at_one(),
            f.evaluate_at_one()
        );
        println!("  certificates: {:?}, {:?}", result.cert_a, result.cert_b);

        // the parts really do sum back to f
        assert_eq!(result.part_a.add(&result.part_b), f);
        println!();
    }

    // inputs outside the decomposable range are rejected
    println!("--- Out of scope ---\n");
    for text in ["x+1", "5x^3"] {
        let f = parse_poly(text).unwrap();
        match decompose(&f) {
            Ok(_) => unreachable!(),
            Err(e) => println!("{text}: {e}"),
        }
    }
}
