//! The input grammar and the canonical formatter.
//!
//! Run with: cargo run --example grammar_roundtrip

use laurent_goldbach::{format_poly, parse_poly};

fn main() {
    println!("=== Polynomial Grammar ===\n");
    println!("poly := term ('+' term)*");
    println!("term := nat | nat? 'x' ('^' int)?");
    println!("nat  := [1-9][0-9]*");
    println!("int  := '-'? nat | '0'\n");

    println!("--- Accepted forms ---\n");
    for text in [
        "x",
        "7",
        "x^0",
        "3x^-2",
        "2x^-3 + x^-3",
        "  6x^7 + 3x^4+4x^3 +7x  ",
        "x+x+x+x",
    ] {
        let f = parse_poly(text).unwrap();
        println!("{text:28} -> {}", format_poly(&f));
        // the canonical form always re-parses to the same polynomial
        assert_eq!(parse_poly(&format_poly(&f)).unwrap(), f);
    }

    println!("\n--- Rejected forms ---\n");
    for text in ["x - 1", "0", "0x^2", "x^", "x^01", "2x^3 4", "-x"] {
        match parse_poly(text) {
            Err(e) => println!("{text:10} -> {e}"),
            Ok(f) => unreachable!("{text} unexpectedly parsed to {f}"),
        }
    }

    println!("\nthe semiring has no subtraction, so '-' between terms is a parse error;");
    println!("negative numbers appear only as exponents after '^'.");
}
