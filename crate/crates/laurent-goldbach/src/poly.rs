//! Sparse Laurent polynomials with nonnegative integer coefficients.
//!
//! A `LaurentPoly` is an element of the semiring ℕ₀[x^±1]: a finite sum of
//! terms c·x^k with c ≥ 1 and k ∈ ℤ, stored in strictly descending exponent
//! order. The empty term list is the zero polynomial. There is no
//! subtraction in the semiring, so `subtract_checked` fails loudly whenever
//! a coefficient would go negative.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors from constructing or combining polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("merged coefficient at x^{exponent} is negative")]
    NegativeCoefficient { exponent: i64 },
    #[error("operation requires at least {required} terms, polynomial has {actual}")]
    TooFewTerms { required: usize, actual: usize },
    #[error("subtraction would drive the coefficient at x^{exponent} below zero")]
    Underflow { exponent: i64 },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// A single term c·x^k with c ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub exponent: i64,
    pub coefficient: BigUint,
}

/// A Laurent polynomial with positive integer coefficients.
///
/// Terms are kept strictly descending by exponent; coefficients are
/// arbitrary-precision and never zero. Exponents are fixed-width and
/// checked on multiplication.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<Term>,
}

/// Consecutive exponent differences Δᵢ = kᵢ − k_{i+1} of a polynomial with
/// at least two terms. Every entry is ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSequence(Vec<i64>);

impl GapSequence {
    pub fn new(gaps: Vec<i64>) -> Self {
        assert!(gaps.iter().all(|&g| g >= 1), "gap entries must be positive");
        GapSequence(gaps)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl LaurentPoly {
    /// The zero polynomial (empty term list).
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    /// The single term c·x^k; c = 0 gives the zero polynomial.
    pub fn monomial(exponent: i64, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Self::zero();
        }
        LaurentPoly {
            terms: vec![Term {
                exponent,
                coefficient: BigUint::from(coefficient),
            }],
        }
    }

    /// The constant 1, the multiplicative identity.
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// Builds a polynomial from (exponent, coefficient) pairs.
    ///
    /// Coefficients at equal exponents are summed; pairs whose merged
    /// coefficient is 0 are dropped; a negative merged total is an error.
    pub fn from_terms<I>(pairs: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut merged: BTreeMap<i64, i128> = BTreeMap::new();
        for (exponent, coefficient) in pairs {
            *merged.entry(exponent).or_insert(0) += i128::from(coefficient);
        }
        let mut terms = Vec::with_capacity(merged.len());
        for (&exponent, &total) in merged.iter().rev() {
            if total < 0 {
                return Err(PolyError::NegativeCoefficient { exponent });
            }
            if total > 0 {
                terms.push(Term {
                    exponent,
                    coefficient: BigUint::from(total as u128),
                });
            }
        }
        Ok(LaurentPoly { terms })
    }

    /// Builds a polynomial from big-coefficient pairs, dropping zeros.
    pub fn from_big_terms<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigUint)>,
    {
        let mut merged: BTreeMap<i64, BigUint> = BTreeMap::new();
        for (exponent, coefficient) in pairs {
            if !coefficient.is_zero() {
                *merged.entry(exponent).or_insert_with(BigUint::zero) += coefficient;
            }
        }
        let terms = merged
            .into_iter()
            .rev()
            .map(|(exponent, coefficient)| Term { exponent, coefficient })
            .collect();
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms, |supp(f)|.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending exponent order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Exponents in descending order.
    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.iter().map(|t| t.exponent)
    }

    /// The coefficient at x^k (zero when k is outside the support).
    pub fn coefficient(&self, exponent: i64) -> BigUint {
        match self.terms.binary_search_by(|t| exponent.cmp(&t.exponent)) {
            Ok(i) => self.terms[i].coefficient.clone(),
            Err(_) => BigUint::zero(),
        }
    }

    /// Largest exponent; `None` for the zero polynomial.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.first().map(|t| t.exponent)
    }

    /// Smallest exponent; `None` for the zero polynomial.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.last().map(|t| t.exponent)
    }

    /// True when the polynomial is a unit of ℕ₀[x^±1], i.e. x^k.
    pub fn is_laurent_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].coefficient.is_one()
    }

    /// Evaluation at 1: the sum of the coefficients.
    pub fn evaluate_at_one(&self) -> BigUint {
        self.terms
            .iter()
            .fold(BigUint::zero(), |acc, t| acc + &t.coefficient)
    }

    /// Evaluation at 1 as a `u64`, when it fits.
    pub fn evaluate_at_one_u64(&self) -> Option<u64> {
        u64::try_from(self.evaluate_at_one()).ok()
    }

    /// The gap sequence Δᵢ = kᵢ − k_{i+1} of a polynomial with ≥ 2 terms.
    pub fn gaps(&self) -> Result<GapSequence, PolyError> {
        if self.terms.len() < 2 {
            return Err(PolyError::TooFewTerms {
                required: 2,
                actual: self.terms.len(),
            });
        }
        let gaps = self
            .terms
            .windows(2)
            .map(|w| w[0].exponent - w[1].exponent)
            .collect();
        Ok(GapSequence(gaps))
    }

    /// Exact sum; no cancellation is possible.
    pub fn add(&self, other: &Self) -> Self {
        let mut merged: BTreeMap<i64, BigUint> = BTreeMap::new();
        for t in self.terms.iter().chain(other.terms.iter()) {
            *merged.entry(t.exponent).or_insert_with(BigUint::zero) += &t.coefficient;
        }
        let terms = merged
            .into_iter()
            .rev()
            .map(|(exponent, coefficient)| Term { exponent, coefficient })
            .collect();
        LaurentPoly { terms }
    }

    /// Exact product. Panics on exponent overflow, which cannot happen at
    /// any realistic exponent scale.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut merged: BTreeMap<i64, BigUint> = BTreeMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let exponent = a
                    .exponent
                    .checked_add(b.exponent)
                    .expect("exponent overflow in multiply");
                *merged.entry(exponent).or_insert_with(BigUint::zero) +=
                    &a.coefficient * &b.coefficient;
            }
        }
        let terms = merged
            .into_iter()
            .rev()
            .map(|(exponent, coefficient)| Term { exponent, coefficient })
            .collect();
        LaurentPoly { terms }
    }

    /// Multiplies by the unit x^k.
    pub fn shifted(&self, k: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                exponent: t.exponent.checked_add(k).expect("exponent overflow in shift"),
                coefficient: t.coefficient.clone(),
            })
            .collect();
        LaurentPoly { terms }
    }

    /// Exact difference, defined only when `other` ≤ `self` termwise.
    pub fn subtract_checked(&self, other: &Self) -> Result<Self, PolyError> {
        let mut merged: BTreeMap<i64, BigUint> = BTreeMap::new();
        for t in &self.terms {
            merged.insert(t.exponent, t.coefficient.clone());
        }
        for t in &other.terms {
            let entry = merged
                .get_mut(&t.exponent)
                .ok_or(PolyError::Underflow { exponent: t.exponent })?;
            if *entry < t.coefficient {
                return Err(PolyError::Underflow { exponent: t.exponent });
            }
            *entry -= &t.coefficient;
        }
        let terms = merged
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exponent, coefficient)| Term { exponent, coefficient })
            .collect();
        Ok(LaurentPoly { terms })
    }

    /// Divides out the unit x^{min exponent} so the minimum exponent becomes
    /// 0. Returns the associate and the original minimum exponent, so that
    /// `self = x^shift · normalized`.
    pub fn normalize(&self) -> Result<(Self, i64), PolyError> {
        let shift = self.min_exponent().ok_or(PolyError::ZeroPolynomial)?;
        Ok((self.shifted(-shift), shift))
    }

    /// gcd of all stored coefficients.
    pub fn coefficient_gcd(&self) -> Result<BigUint, PolyError> {
        if self.terms.is_empty() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut g = BigUint::zero();
        for t in &self.terms {
            g = g.gcd(&t.coefficient);
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    /// The term of minimal coefficient, ties broken by largest exponent.
    /// Returns (term index, exponent, coefficient).
    pub fn min_coefficient_term(&self) -> Result<(usize, i64, BigUint), PolyError> {
        let mut best: Option<(usize, i64, &BigUint)> = None;
        for (i, t) in self.terms.iter().enumerate() {
            match best {
                Some((_, _, c)) if t.coefficient >= *c => {}
                _ => best = Some((i, t.exponent, &t.coefficient)),
            }
        }
        best.map(|(i, e, c)| (i, e, c.clone()))
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Restriction of the polynomial to a set of term indices.
    pub fn restrict_to_indices(&self, indices: &[usize]) -> Self {
        let terms = indices
            .iter()
            .filter_map(|&i| self.terms.get(i).cloned())
            .collect::<Vec<_>>();
        debug_assert!(terms.windows(2).all(|w| w[0].exponent > w[1].exponent));
        LaurentPoly { terms }
    }

    /// Signed coefficient vector indexed from the maximum exponent down,
    /// for exact division in the oracle. Requires a nonzero polynomial.
    pub(crate) fn dense_signed(&self) -> (i64, Vec<BigInt>) {
        let max = self.max_exponent().expect("dense_signed on zero polynomial");
        let min = self.min_exponent().unwrap();
        let mut dense = vec![BigInt::zero(); (max - min) as usize + 1];
        for t in &self.terms {
            dense[(max - t.exponent) as usize] = BigInt::from(t.coefficient.clone());
        }
        (max, dense)
    }
}
