//! Brute-force factorization ground truth.
//!
//! Everything here trades speed for auditability: candidate factors are
//! enumerated as coefficient compositions of each divisor of f(1) over a
//! bounded degree window, and exact division is the only filter. The same
//! machinery answers irreducibility, monolithicity, and the exhaustive
//! sum-of-two-irreducibles search, in two unit regimes:
//!
//! * `LaurentUnits` — every monomial x^k is a unit (the ℕ₀\[x^±1\] view);
//! * `PolyUnits`   — only the constant 1 is a unit (the ℕ₀\[x\] view).
//!
//! Hard size limits guard every entry point so a caller can never silently
//! skip a verification that was too large to run.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::poly::LaurentPoly;

/// Which elements count as units during factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemiringMode {
    LaurentUnits,
    PolyUnits,
}

/// Search limits. The defaults keep every oracle call at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_value: u64,
    pub max_degree: i64,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds { max_value: 24, max_degree: 12 }
    }
}

/// Outcome of the exhaustive factor search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorizationWitness {
    /// A nontrivial factor pair of the (mode-normalized) input.
    Factors { left: LaurentPoly, right: LaurentPoly },
    /// Every candidate within the bounds was tried and rejected.
    Exhausted { bounds: OracleBounds },
}

impl FactorizationWitness {
    pub fn is_exhausted(&self) -> bool {
        matches!(self, FactorizationWitness::Exhausted { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("oracle is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("input exceeds oracle bounds (value {value}, degree {degree}; limits value <= {max_value}, degree <= {max_degree})")]
    SizeLimit {
        value: BigUint,
        degree: i64,
        max_value: u64,
        max_degree: i64,
    },
    #[error("PolyUnits mode requires all exponents to be nonnegative")]
    NegativeExponent,
}

fn size_limit(value: &BigUint, degree: i64, bounds: &OracleBounds) -> OracleError {
    OracleError::SizeLimit {
        value: value.clone(),
        degree,
        max_value: bounds.max_value,
        max_degree: bounds.max_degree,
    }
}

/// The representative that actually gets factored: the normalized associate
/// in Laurent mode, the polynomial itself in poly mode.
fn mode_representative(f: &LaurentPoly, mode: SemiringMode) -> Result<LaurentPoly, OracleError> {
    if f.is_zero() {
        return Err(OracleError::ZeroPolynomial);
    }
    match mode {
        SemiringMode::LaurentUnits => Ok(f.normalize().expect("nonzero").0),
        SemiringMode::PolyUnits => {
            if f.min_exponent().unwrap() < 0 {
                Err(OracleError::NegativeExponent)
            } else {
                Ok(f.clone())
            }
        }
    }
}

fn check_bounds(rep: &LaurentPoly, bounds: &OracleBounds) -> Result<u64, OracleError> {
    let value = rep.evaluate_at_one();
    let degree = rep.max_exponent().unwrap();
    if value > BigUint::from(bounds.max_value) || degree > bounds.max_degree {
        return Err(size_limit(&value, degree, bounds));
    }
    Ok(u64::try_from(value).expect("bounded value fits u64"))
}

/// Divisors of n in [2, n/2], ascending.
fn proper_divisors(n: u64) -> Vec<u64> {
    (2..=n / 2).filter(|d| n % d == 0).collect()
}

/// Exact division in ℤ[x^±1], accepted only when the quotient lies in
/// ℕ₀[x^±1] and the remainder is zero.
pub(crate) fn divide_exact(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
    if f.is_zero() || g.is_zero() {
        return None;
    }
    let (f_max, mut rem) = f.dense_signed();
    let (g_max, gv) = g.dense_signed();
    if rem.len() < gv.len() {
        return None;
    }
    let q_len = rem.len() - gv.len() + 1;
    let lead_exp = f_max - g_max;
    let mut quotient: Vec<(i64, BigInt)> = Vec::new();
    for i in 0..q_len {
        if rem[i].is_zero() {
            continue;
        }
        let (q, r) = num_integer::div_rem(rem[i].clone(), gv[0].clone());
        if !r.is_zero() || q.is_negative() {
            return None;
        }
        for (j, gc) in gv.iter().enumerate() {
            let delta = &q * gc;
            rem[i + j] -= delta;
        }
        quotient.push((lead_exp - i as i64, q));
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(LaurentPoly::from_big_terms(quotient.into_iter().map(|(e, c)| {
        (e, c.to_biguint().expect("quotient coefficients are nonnegative"))
    })))
}

/// Calls `visit` on every polynomial with coefficient sum `value`,
/// exponents inside [0, max_degree], constant term ≥ `c0_min`, and at least
/// `min_terms` terms, in a fixed canonical order (coefficients of the
/// higher exponents grow last). Stops early when `visit` returns true.
fn for_each_candidate(
    value: u64,
    max_degree: i64,
    c0_min: u64,
    min_terms: usize,
    visit: &mut dyn FnMut(&LaurentPoly) -> bool,
) -> bool {
    fn recurse(
        exponent: i64,
        remaining: u64,
        stack: &mut Vec<(i64, u64)>,
        c0_min: u64,
        min_terms: usize,
        visit: &mut dyn FnMut(&LaurentPoly) -> bool,
    ) -> bool {
        if exponent == 0 {
            let terms = stack.len() + usize::from(remaining > 0);
            if remaining < c0_min || terms < min_terms {
                return false;
            }
            if remaining > 0 {
                stack.push((0, remaining));
            }
            let candidate = LaurentPoly::from_terms(
                stack.iter().map(|&(e, c)| (e, c as i64)),
            )
            .expect("candidate coefficients are positive");
            let stop = visit(&candidate);
            if remaining > 0 {
                stack.pop();
            }
            return stop;
        }
        for c in 0..=remaining {
            if c > 0 {
                stack.push((exponent, c));
            }
            let stop = recurse(exponent - 1, remaining - c, stack, c0_min, min_terms, visit);
            if c > 0 {
                stack.pop();
            }
            if stop {
                return true;
            }
        }
        false
    }
    let mut stack = Vec::new();
    recurse(max_degree, value, &mut stack, c0_min, min_terms, visit)
}

/// Exhaustive factor search with the default bounds.
pub fn find_factorization(
    f: &LaurentPoly,
    mode: SemiringMode,
) -> Result<FactorizationWitness, OracleError> {
    find_factorization_with(f, mode, &OracleBounds::default())
}

/// Exhaustive factor search.
///
/// The candidate side runs over every divisor v of f̃(1) in [2, f̃(1)/2]
/// and every coefficient composition of v with degree ≤ ⌊deg(f̃)/2⌋ (with
/// constant term ≥ 1 in Laurent mode, where candidates are normalized). In
/// poly mode the monomials x^k — the only non-unit elements of value 1 —
/// are tried first. The first witness in candidate order is returned.
pub fn find_factorization_with(
    f: &LaurentPoly,
    mode: SemiringMode,
    bounds: &OracleBounds,
) -> Result<FactorizationWitness, OracleError> {
    let rep = mode_representative(f, mode)?;
    let value = check_bounds(&rep, bounds)?;
    let degree = rep.max_exponent().unwrap();

    if mode == SemiringMode::PolyUnits {
        let min_exp = rep.min_exponent().unwrap();
        for k in 1..=degree.min(min_exp) {
            let quotient = rep.shifted(-k);
            if quotient != LaurentPoly::one() {
                return Ok(FactorizationWitness::Factors {
                    left: LaurentPoly::monomial(k, 1),
                    right: quotient,
                });
            }
        }
    }

    let c0_min = match mode {
        SemiringMode::LaurentUnits => 1,
        SemiringMode::PolyUnits => 0,
    };
    let mut witness = None;
    for v in proper_divisors(value) {
        let found = for_each_candidate(v, degree / 2, c0_min, 1, &mut |candidate| {
            if let Some(quotient) = divide_exact(&rep, candidate) {
                witness = Some(FactorizationWitness::Factors {
                    left: candidate.clone(),
                    right: quotient,
                });
                true
            } else {
                false
            }
        });
        if found {
            break;
        }
    }
    Ok(witness.unwrap_or(FactorizationWitness::Exhausted { bounds: *bounds }))
}

/// True when `f` is a non-unit and the exhaustive search finds no
/// factorization. Units are not irreducible.
pub fn is_irreducible_oracle(f: &LaurentPoly, mode: SemiringMode) -> Result<bool, OracleError> {
    is_irreducible_oracle_with(f, mode, &OracleBounds::default())
}

pub fn is_irreducible_oracle_with(
    f: &LaurentPoly,
    mode: SemiringMode,
    bounds: &OracleBounds,
) -> Result<bool, OracleError> {
    if f.is_zero() {
        return Err(OracleError::ZeroPolynomial);
    }
    let is_unit = match mode {
        SemiringMode::LaurentUnits => f.is_laurent_unit(),
        SemiringMode::PolyUnits => {
            if f.min_exponent().unwrap() < 0 {
                return Err(OracleError::NegativeExponent);
            }
            *f == LaurentPoly::one()
        }
    };
    if is_unit {
        return Ok(false);
    }
    Ok(find_factorization_with(f, mode, bounds)?.is_exhausted())
}

/// True when every factorization of `f` (in the Laurent regime) involves a
/// monomial factor. Searches specifically for a factorization into two
/// polynomials of ≥ 2 terms each; none found means monolithic.
pub fn is_monolithic_oracle(f: &LaurentPoly) -> Result<bool, OracleError> {
    is_monolithic_oracle_with(f, &OracleBounds::default())
}

pub fn is_monolithic_oracle_with(
    f: &LaurentPoly,
    bounds: &OracleBounds,
) -> Result<bool, OracleError> {
    let rep = mode_representative(f, SemiringMode::LaurentUnits)?;
    let value = check_bounds(&rep, bounds)?;
    if rep.support_size() == 1 {
        return Ok(true);
    }
    let degree = rep.max_exponent().unwrap();
    for v in proper_divisors(value) {
        let found = for_each_candidate(v, degree / 2, 1, 2, &mut |candidate| {
            match divide_exact(&rep, candidate) {
                Some(quotient) => quotient.support_size() >= 2,
                None => false,
            }
        });
        if found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All termwise splits f = A + B with A, B nonzero and both irreducible in
/// the given mode. Each unordered pair appears once, with A ≤ B in the
/// canonical term ordering, and the list itself is sorted.
pub fn enumerate_two_irreducible_splits(
    f: &LaurentPoly,
    mode: SemiringMode,
) -> Result<Vec<(LaurentPoly, LaurentPoly)>, OracleError> {
    enumerate_two_irreducible_splits_with(f, mode, &OracleBounds::default())
}

pub fn enumerate_two_irreducible_splits_with(
    f: &LaurentPoly,
    mode: SemiringMode,
    bounds: &OracleBounds,
) -> Result<Vec<(LaurentPoly, LaurentPoly)>, OracleError> {
    if f.is_zero() {
        return Ok(Vec::new());
    }
    let rep = mode_representative(f, mode)?;
    check_bounds(&rep, bounds)?;

    let coeffs: Vec<u64> = f
        .terms()
        .iter()
        .map(|t| u64::try_from(t.coefficient.clone()).expect("bounded value fits u64"))
        .collect();
    let exponents: Vec<i64> = f.exponents().collect();
    let total_splits: u128 = coeffs.iter().map(|&c| u128::from(c) + 1).product();
    if total_splits > 1 << 20 {
        let value = f.evaluate_at_one();
        let degree = rep.max_exponent().unwrap();
        return Err(size_limit(&value, degree, bounds));
    }

    let mut cache: HashMap<LaurentPoly, bool> = HashMap::new();
    let mut irreducible = |p: &LaurentPoly| -> Result<bool, OracleError> {
        if let Some(&hit) = cache.get(p) {
            return Ok(hit);
        }
        let verdict = is_irreducible_oracle_with(p, mode, bounds)?;
        cache.insert(p.clone(), verdict);
        Ok(verdict)
    };

    let mut splits = Vec::new();
    let mut assignment = vec![0u64; coeffs.len()];
    loop {
        // advance the mixed-radix counter
        let mut i = 0;
        while i < coeffs.len() {
            if assignment[i] < coeffs[i] {
                assignment[i] += 1;
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
        if assignment.iter().zip(&coeffs).all(|(a, c)| a == c) {
            continue; // A = f leaves B = 0
        }
        let a = LaurentPoly::from_terms(
            exponents
                .iter()
                .zip(&assignment)
                .filter(|(_, &c)| c > 0)
                .map(|(&e, &c)| (e, c as i64)),
        )
        .expect("split coefficients are positive");
        let b = f.subtract_checked(&a).expect("split stays below f");
        if a > b {
            continue; // the mirrored split covers this pair
        }
        if irreducible(&a)? && irreducible(&b)? {
            splits.push((a, b));
        }
    }
    splits.sort();
    Ok(splits)
}
