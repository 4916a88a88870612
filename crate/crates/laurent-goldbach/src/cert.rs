//! Sufficient irreducibility criteria packaged as re-checkable evidence.
//!
//! A certificate is data, not a boolean: `verify_certificate` re-evaluates
//! the side conditions from scratch, so a consumer never has to trust the
//! producer. Absence of a certificate does not imply reducibility.
//!
//! The criteria, in the fixed dispatch order (cheapest first):
//!
//! 1. the coefficient sum f(1) is prime;
//! 2. f is hyper-monolithic with coprime coefficients;
//! 3. f is a quadrinomial with unit coefficients whose outer exponent gaps
//!    differ (such an f cannot be a product of two binomials);
//! 4. the brute-force oracle exhausts its search space.

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::{is_irreducible_oracle_with, OracleBounds, OracleError};
use crate::poly::LaurentPoly;
use crate::primes::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("cannot certify the zero polynomial")]
    ZeroPolynomial,
    #[error("criterion requires exactly four terms with coefficient 1")]
    ShapeMismatch,
}

/// Verifiable evidence that a polynomial is irreducible in ℕ₀[x^±1].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum IrreducibilityCertificate {
    /// f(1) is the stated prime.
    PrimeEvaluation { prime: u64 },
    /// f is hyper-monolithic and its coefficients have gcd 1.
    HyperMonolithicGcd1,
    /// f is exactly the four stated unit-coefficient terms, and the first
    /// exponent gap differs from the last.
    QuadrinomialGap { exponents: [i64; 4] },
    /// The exhaustive search within the stated bounds found no factor.
    OracleExhaustion { max_value: u64, max_degree: i64 },
}

impl IrreducibilityCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            IrreducibilityCertificate::PrimeEvaluation { .. } => "prime_evaluation",
            IrreducibilityCertificate::HyperMonolithicGcd1 => "hyper_monolithic_gcd1",
            IrreducibilityCertificate::QuadrinomialGap { .. } => "quadrinomial_gap",
            IrreducibilityCertificate::OracleExhaustion { .. } => "oracle_exhaustion",
        }
    }
}

/// True when |supp(f)| > 1 and the strictly smallest exponent gap sits at
/// the first or last position of the gap sequence. Binomials satisfy both
/// conditions vacuously.
pub fn is_hyper_monolithic(f: &LaurentPoly) -> bool {
    if f.support_size() < 2 {
        return false;
    }
    let gaps = f.gaps().expect("two or more terms");
    let d = gaps.as_slice();
    let n = d.len();
    let front = (1..n).all(|i| d[0] < d[i]);
    let back = (0..n - 1).all(|j| d[n - 1] < d[j]);
    front || back
}

/// For a quadrinomial with unit coefficients: true iff k₀−k₁ ≠ k₂−k₃,
/// which rules out a product of two binomials and hence is sufficient for
/// irreducibility.
pub fn check_quadrinomial_gap(f: &LaurentPoly) -> Result<bool, CertError> {
    if f.support_size() != 4 || !f.terms().iter().all(|t| t.coefficient.is_one()) {
        return Err(CertError::ShapeMismatch);
    }
    let k: Vec<i64> = f.exponents().collect();
    Ok(k[0] - k[1] != k[2] - k[3])
}

/// Tries the criteria in dispatch order and returns the first certificate
/// that applies, or `None` when all fail (which does not imply that f is
/// reducible). The oracle step runs only when `allow_oracle` is set and the
/// polynomial fits the default oracle bounds.
pub fn certify_irreducible(
    f: &LaurentPoly,
    allow_oracle: bool,
) -> Result<Option<IrreducibilityCertificate>, CertError> {
    certify_irreducible_with(f, allow_oracle, &OracleBounds::default())
}

pub fn certify_irreducible_with(
    f: &LaurentPoly,
    allow_oracle: bool,
    bounds: &OracleBounds,
) -> Result<Option<IrreducibilityCertificate>, CertError> {
    if f.is_zero() {
        return Err(CertError::ZeroPolynomial);
    }
    if let Some(value) = f.evaluate_at_one_u64() {
        if is_prime(value) {
            return Ok(Some(IrreducibilityCertificate::PrimeEvaluation { prime: value }));
        }
    }
    if is_hyper_monolithic(f) && f.coefficient_gcd().expect("nonzero").is_one() {
        return Ok(Some(IrreducibilityCertificate::HyperMonolithicGcd1));
    }
    if let Ok(true) = check_quadrinomial_gap(f) {
        let k: Vec<i64> = f.exponents().collect();
        return Ok(Some(IrreducibilityCertificate::QuadrinomialGap {
            exponents: [k[0], k[1], k[2], k[3]],
        }));
    }
    if allow_oracle {
        match is_irreducible_oracle_with(f, crate::oracle::SemiringMode::LaurentUnits, bounds) {
            Ok(true) => {
                return Ok(Some(IrreducibilityCertificate::OracleExhaustion {
                    max_value: bounds.max_value,
                    max_degree: bounds.max_degree,
                }))
            }
            Ok(false) => return Ok(None),
            Err(OracleError::SizeLimit { .. }) => return Ok(None),
            Err(e) => unreachable!("oracle rejected a nonzero Laurent input: {e}"),
        }
    }
    Ok(None)
}

/// Re-checks a certificate's side conditions against `f` from scratch.
pub fn verify_certificate(f: &LaurentPoly, cert: &IrreducibilityCertificate) -> bool {
    match cert {
        IrreducibilityCertificate::PrimeEvaluation { prime } => {
            is_prime(*prime) && f.evaluate_at_one_u64() == Some(*prime)
        }
        IrreducibilityCertificate::HyperMonolithicGcd1 => {
            is_hyper_monolithic(f)
                && f.coefficient_gcd().map(|g| g.is_one()).unwrap_or(false)
        }
        IrreducibilityCertificate::QuadrinomialGap { exponents } => {
            check_quadrinomial_gap(f) == Ok(true)
                && f.exponents().collect::<Vec<_>>() == exponents
        }
        IrreducibilityCertificate::OracleExhaustion { max_value, max_degree } => {
            let bounds = OracleBounds { max_value: *max_value, max_degree: *max_degree };
            is_irreducible_oracle_with(f, crate::oracle::SemiringMode::LaurentUnits, &bounds)
                == Ok(true)
        }
    }
}
