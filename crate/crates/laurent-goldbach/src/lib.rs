//! Sums of two irreducibles in ℕ₀[x^±1].
//!
//! Every Laurent polynomial f with positive integer coefficients can be
//! written as a sum of two irreducibles of ℕ₀[x^±1], provided f(1) > 3 and
//! f has more than one term. This crate implements that statement
//! constructively:
//!
//! * [`poly`] — exact sparse Laurent polynomials over ℕ₀ and gap sequences;
//! * [`primes`] — trial division, Goldbach pairs, and the prime-window pick;
//! * [`cert`] — irreducibility criteria packaged as verifiable certificates;
//! * [`mod@decompose`] — the splitting, peeling, and dispatch pipeline;
//! * [`oracle`] — an independent brute-force factorizer that cross-checks
//!   every claim at desk scale, in both the ℕ₀\[x^±1\] and ℕ₀\[x\] unit regimes;
//! * [`text`], [`report`] — the input grammar and the JSON certificate
//!   schema;
//! * [`stress`] — a seeded random harness tying it all together;
//! * [`cli`] — the `lg` command-line front end.
//!
//! ```
//! use laurent_goldbach::{decompose, parse_poly, verify_certificate};
//!
//! let f = parse_poly("6x^7+3x^4+4x^3+7x+5x^-1+3x^-4+8x^-6").unwrap();
//! let result = decompose(&f).unwrap();
//! assert_eq!(result.part_a.add(&result.part_b), f);
//! assert!(verify_certificate(&result.part_a, &result.cert_a));
//! assert!(verify_certificate(&result.part_b, &result.cert_b));
//! ```

pub mod cert;
pub mod cli;
pub mod decompose;
pub mod oracle;
pub mod poly;
pub mod primes;
pub mod report;
pub mod stress;
pub mod text;

pub use cert::{
    certify_irreducible, check_quadrinomial_gap, is_hyper_monolithic, verify_certificate,
    IrreducibilityCertificate,
};
pub use decompose::{
    decompose, decompose_binomial, decompose_by_prime_pair, decompose_nagura, decompose_small,
    peel_units, split_hyper_monolithic, split_indices, DecompositionResult,
};
pub use oracle::{
    enumerate_two_irreducible_splits, find_factorization, is_irreducible_oracle,
    is_monolithic_oracle, FactorizationWitness, OracleBounds, SemiringMode,
};
pub use poly::{GapSequence, LaurentPoly};
pub use primes::{goldbach_pair, is_prime, largest_prime_below, nagura_prime_for, PrimePair};
pub use text::{format_poly, parse_poly, ParseError, PolyExpr};
