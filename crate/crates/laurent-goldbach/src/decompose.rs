//! The constructive sum-of-two-irreducibles pipeline.
//!
//! The driver `decompose` dispatches on support size and coefficient sum:
//! binomials get a direct coefficient split; values whose f(1) is a sum of
//! two primes get a greedy prime-pair fill; the five exceptional values
//! {11, 17, 23, 27, 29} get bespoke small-case constructions; everything
//! with f(1) ≥ 32 goes through the hyper-monolithic split plus unit peeling
//! against a prime chosen in the window [5f(1)/6 − 1, f(1) − 2].
//!
//! Every output carries certificates for both parts and a trace of the
//! branch taken and the intermediate polynomials, so results can be
//! re-verified without re-running the pipeline.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::cert::{certify_irreducible, is_hyper_monolithic, IrreducibilityCertificate};
use crate::poly::{GapSequence, LaurentPoly, PolyError};
use crate::primes::{is_prime, nagura_prime_for, PrimePair, PrimesError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DecomposeError {
    #[error("decomposition requires f(1) > 3, but f(1) = {value}")]
    NotCovered { value: BigUint },
    #[error("decomposition requires more than one term in the support")]
    SupportTooSmall,
    #[error("gap sequence must have at least two entries")]
    TooShort,
    #[error("hyper-monolithic split requires at least three terms")]
    TooFewTerms,
    #[error("prime {prime} is outside the window [5*{value}/6 - 1, {value} - 2]")]
    WindowViolation { value: u64, prime: u64 },
    #[error("f(1) = {value} does not match the pair sum {pair_sum}")]
    ValueMismatch { value: BigUint, pair_sum: u64 },
    #[error("peel amount {amount} exceeds the maximum {max}")]
    AmountTooLarge { amount: u64, max: u64 },
    #[error("unit-moving repair failed to reach coefficient gcd 1")]
    RepairFailed,
    #[error("f(1) = {value} is too large for the prime search")]
    ValueTooLarge { value: BigUint },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Primes(#[from] PrimesError),
}

impl From<PolyError> for DecomposeError {
    fn from(e: PolyError) -> Self {
        DecomposeError::Precondition(e.to_string())
    }
}

/// The gap-sequence indices α < β around which the split is organized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitIndices {
    pub alpha: usize,
    pub beta: usize,
}

/// Which term indices go to each side of the split. The two sets cover all
/// indices and overlap in at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPlan {
    pub s_g: Vec<usize>,
    pub s_h: Vec<usize>,
    pub adjustment_applied: bool,
}

/// Which pipeline branch produced a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Binomial,
    PrimePair,
    SmallCoefficient,
    SmallQuadrinomial,
    SmallPeel,
    Nagura,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Binomial => "binomial",
            Branch::PrimePair => "prime_pair",
            Branch::SmallCoefficient => "small_coefficient",
            Branch::SmallQuadrinomial => "small_quadrinomial",
            Branch::SmallPeel => "small_peel",
            Branch::Nagura => "nagura",
        }
    }
}

/// Record of the branch taken and the intermediate values it used.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionTrace {
    pub branch: Branch,
    pub prime: Option<u64>,
    pub split: Option<SplitIndices>,
    pub peel_amount: Option<u64>,
    pub min_coefficient: Option<u64>,
    pub intermediates: Vec<(String, LaurentPoly)>,
}

impl DecompositionTrace {
    fn new(branch: Branch) -> Self {
        DecompositionTrace {
            branch,
            prime: None,
            split: None,
            peel_amount: None,
            min_coefficient: None,
            intermediates: Vec::new(),
        }
    }

    fn with_poly(mut self, name: &str, poly: &LaurentPoly) -> Self {
        self.intermediates.push((name.to_string(), poly.clone()));
        self
    }
}

/// A decomposition f = A + B with per-part certificates and a trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionResult {
    pub part_a: LaurentPoly,
    pub part_b: LaurentPoly,
    pub cert_a: IrreducibilityCertificate,
    pub cert_b: IrreducibilityCertificate,
    pub trace: DecompositionTrace,
}

fn finish(
    f: &LaurentPoly,
    part_a: LaurentPoly,
    part_b: LaurentPoly,
    trace: DecompositionTrace,
) -> DecompositionResult {
    assert_eq!(part_a.add(&part_b), *f, "parts must sum to the input");
    assert!(!part_a.is_zero() && !part_b.is_zero());
    let cert_a = certify_irreducible(&part_a, false)
        .expect("nonzero part")
        .expect("constructed part carries a criterion-backed certificate");
    let cert_b = certify_irreducible(&part_b, false)
        .expect("nonzero part")
        .expect("constructed part carries a criterion-backed certificate");
    DecompositionResult { part_a, part_b, cert_a, cert_b, trace }
}

/// Picks indices α < β of the gap sequence such that every entry outside
/// [α, β] is larger than max(Δ_α, Δ_β), and at most one entry inside is
/// smaller.
///
/// When the minimum occurs more than once, α and β are its first and last
/// positions. When it occurs once, positions holding the minimum or the
/// second-smallest value (of the multiset with one copy of the minimum
/// removed) qualify, and α, β are the first and last qualifiers.
pub fn split_indices(gaps: &GapSequence) -> Result<SplitIndices, DecomposeError> {
    let d = gaps.as_slice();
    if d.len() < 2 {
        return Err(DecomposeError::TooShort);
    }
    let min = *d.iter().min().unwrap();
    let occurrences = d.iter().filter(|&&x| x == min).count();
    let qualifies: Box<dyn Fn(i64) -> bool> = if occurrences >= 2 {
        Box::new(move |x| x == min)
    } else {
        let mut sorted = d.to_vec();
        sorted.sort_unstable();
        let second = sorted[1];
        Box::new(move |x| x == min || x == second)
    };
    let alpha = d.iter().position(|&x| qualifies(x)).unwrap();
    let beta = d.len() - 1 - d.iter().rev().position(|&x| qualifies(x)).unwrap();
    debug_assert!(alpha < beta);
    Ok(SplitIndices { alpha, beta })
}

/// Computes the index partition used by `split_hyper_monolithic`.
pub fn split_plan(f: &LaurentPoly) -> Result<(SplitIndices, SplitPlan), DecomposeError> {
    if f.support_size() < 3 {
        return Err(DecomposeError::TooFewTerms);
    }
    let gaps = f.gaps().expect("three or more terms");
    let si = split_indices(&gaps)?;
    let (alpha, beta) = (si.alpha, si.beta);
    let n = f.support_size() - 1;
    let d = gaps.as_slice();

    let mut s_g: Vec<usize> = vec![alpha, alpha + 1];
    let mut s_h: Vec<usize> = (0..alpha).collect();
    for i in alpha + 2..beta {
        if (i - alpha) % 2 == 1 {
            s_g.push(i);
        } else {
            s_h.push(i);
        }
    }
    s_h.push(beta);
    s_h.push(beta + 1);
    s_g.extend(beta + 2..=n);

    let adjustment_applied =
        (beta - alpha) % 2 == 1 && beta - alpha > 1 && d[beta - 1] <= d[beta];
    if adjustment_applied {
        s_h.retain(|&i| i != beta + 1);
        s_g.push(beta + 1);
    }
    s_g.sort_unstable();
    s_h.sort_unstable();
    Ok((si, SplitPlan { s_g, s_h, adjustment_applied }))
}

fn split_parts(
    f: &LaurentPoly,
) -> Result<(LaurentPoly, LaurentPoly, SplitIndices), DecomposeError> {
    let (si, plan) = split_plan(f)?;
    let g = f.restrict_to_indices(&plan.s_g);
    let h = f.restrict_to_indices(&plan.s_h);

    let first = if g.evaluate_at_one() * 2u32 >= f.evaluate_at_one() { g } else { h };
    let second = f.subtract_checked(&first).expect("restriction stays below f");
    assert!(
        first.evaluate_at_one() >= second.evaluate_at_one(),
        "split selection must put the larger value first"
    );
    assert!(!second.is_zero(), "split remainder must be nonzero");
    assert!(is_hyper_monolithic(&first), "split first component must be hyper-monolithic");
    Ok((first, second, si))
}

/// Splits f (with ≥ 3 terms) into a hyper-monolithic part and a remainder
/// of no larger value. Returns (first, f − first) with first(1) ≥ the
/// remainder's value; the first component is always hyper-monolithic.
pub fn split_hyper_monolithic(
    f: &LaurentPoly,
) -> Result<(LaurentPoly, LaurentPoly), DecomposeError> {
    let (first, second, _) = split_parts(f)?;
    Ok((first, second))
}

fn coeff_u64(c: &BigUint) -> u64 {
    u64::try_from(c.clone()).expect("coefficient fits u64 at pipeline scale")
}

/// Removes `amount` units from a hyper-monolithic, gcd-1 polynomial so that
/// what is kept stays hyper-monolithic with gcd 1 (hence irreducible).
///
/// Returns (kept, removed) with kept + removed = g and removed(1) = amount.
/// The rule is deterministic: protect the two exponents flanking the
/// strictly-minimal gap end, shrink the support from the other end down to
/// the target value, give every kept exponent one unit, then pour the rest
/// in descending-exponent order capped by the original coefficients. A
/// unit-moving repair fixes the coefficient gcd in the rare case the pour
/// lands on a common divisor.
pub fn peel_units(
    g: &LaurentPoly,
    amount: u64,
) -> Result<(LaurentPoly, LaurentPoly), DecomposeError> {
    if !is_hyper_monolithic(g) {
        return Err(DecomposeError::Precondition(
            "peel_units requires a hyper-monolithic input".into(),
        ));
    }
    if !g.coefficient_gcd().expect("nonzero").is_one() {
        return Err(DecomposeError::Precondition(
            "peel_units requires coefficient gcd 1".into(),
        ));
    }
    let sigma = g
        .evaluate_at_one_u64()
        .ok_or_else(|| DecomposeError::ValueTooLarge { value: g.evaluate_at_one() })?;
    if amount > sigma - 2 {
        return Err(DecomposeError::AmountTooLarge { amount, max: sigma - 2 });
    }
    let target = sigma - amount;

    let gaps = g.gaps().expect("two or more terms");
    let d = gaps.as_slice();
    let front_protected = (1..d.len()).all(|i| d[0] < d[i]);

    // (exponent, cap, kept coefficient), descending by exponent
    let mut kept: Vec<(i64, u64, u64)> = g
        .terms()
        .iter()
        .map(|t| (t.exponent, coeff_u64(&t.coefficient), 0))
        .collect();
    let mut dropped: Vec<(i64, u64)> = Vec::new();
    while kept.len() as u64 > target && kept.len() > 2 {
        let (e, cap, _) = if front_protected { kept.pop().unwrap() } else { kept.remove(0) };
        dropped.push((e, cap));
    }

    let mut remaining = target - kept.len() as u64;
    for slot in kept.iter_mut() {
        slot.2 = 1;
        let add = remaining.min(slot.1 - 1);
        slot.2 += add;
        remaining -= add;
    }
    assert_eq!(remaining, 0, "kept support always has capacity for the target value");

    repair_gcd(&mut kept, &mut dropped, front_protected, sigma)?;

    let kept_poly = LaurentPoly::from_big_terms(
        kept.iter().map(|&(e, _, c)| (e, BigUint::from(c))),
    );
    let removed = g.subtract_checked(&kept_poly).expect("kept stays below g termwise");

    assert_eq!(removed.evaluate_at_one(), BigUint::from(amount));
    assert!(kept_poly.support_size() >= 2);
    assert!(is_hyper_monolithic(&kept_poly), "peel must preserve hyper-monolithicity");
    assert!(kept_poly.coefficient_gcd().expect("nonzero").is_one());
    Ok((kept_poly, removed))
}

fn slots_gcd(slots: &[(i64, u64, u64)]) -> u64 {
    slots.iter().fold(0, |acc, &(_, _, c)| num_integer::gcd(acc, c))
}

/// Moves single units between kept terms until the coefficient gcd is 1.
/// Each move decrements a coefficient ≥ 2 and increments one below its cap;
/// when no move is possible the most recently dropped exponent is re-added
/// with one unit taken from a donor. Bounded by the coefficient mass.
fn repair_gcd(
    kept: &mut Vec<(i64, u64, u64)>,
    dropped: &mut Vec<(i64, u64)>,
    front_protected: bool,
    mass: u64,
) -> Result<(), DecomposeError> {
    let budget = mass as usize * 2 + 16;
    for _ in 0..budget {
        if slots_gcd(kept) == 1 {
            return Ok(());
        }
        let mut winning: Option<(usize, usize)> = None;
        let mut first_legal: Option<(usize, usize)> = None;
        'scan: for donor in 0..kept.len() {
            if kept[donor].2 < 2 {
                continue;
            }
            for receiver in 0..kept.len() {
                if receiver == donor || kept[receiver].2 >= kept[receiver].1 {
                    continue;
                }
                if first_legal.is_none() {
                    first_legal = Some((donor, receiver));
                }
                let g = kept.iter().enumerate().fold(0u64, |acc, (i, &(_, _, c))| {
                    let c = match i {
                        _ if i == donor => c - 1,
                        _ if i == receiver => c + 1,
                        _ => c,
                    };
                    num_integer::gcd(acc, c)
                });
                if g == 1 {
                    winning = Some((donor, receiver));
                    break 'scan;
                }
            }
        }
        if let Some((d, r)) = winning.or(first_legal) {
            kept[d].2 -= 1;
            kept[r].2 += 1;
            continue;
        }
        // every receiver is at its cap: bring back the last dropped exponent
        let (exp, cap) = dropped.pop().ok_or(DecomposeError::RepairFailed)?;
        let donor = kept
            .iter()
            .position(|&(_, _, c)| c >= 2)
            .ok_or(DecomposeError::RepairFailed)?;
        kept[donor].2 -= 1;
        if front_protected {
            kept.push((exp, cap, 1));
        } else {
            kept.insert(0, (exp, cap, 1));
        }
    }
    if slots_gcd(kept) == 1 {
        Ok(())
    } else {
        Err(DecomposeError::RepairFailed)
    }
}

/// The two-term binomial (ax^r, bx^s) of f in descending coefficient
/// order; a tie goes to the larger exponent.
fn binomial_parts(f: &LaurentPoly) -> ((u64, i64), (u64, i64)) {
    let t = f.terms();
    let c0 = coeff_u64(&t[0].coefficient);
    let c1 = coeff_u64(&t[1].coefficient);
    if c0 >= c1 {
        ((c0, t[0].exponent), (c1, t[1].exponent))
    } else {
        ((c1, t[1].exponent), (c0, t[0].exponent))
    }
}

/// Decomposes a binomial f = ax^r + bx^s with a ≥ b and f(1) > 3 into
/// ((a−2)x^r + x^s, 2x^r) when b = 1, else ((a−1)x^r + x^s, x^r + (b−1)x^s).
pub fn decompose_binomial(f: &LaurentPoly) -> Result<DecompositionResult, DecomposeError> {
    if f.support_size() != 2 {
        return Err(DecomposeError::Precondition("binomial branch needs exactly two terms".into()));
    }
    if value_u64(f)? <= 3 {
        return Err(DecomposeError::Precondition("binomial branch needs f(1) > 3".into()));
    }
    let ((a, r), (b, s)) = binomial_parts(f);
    let (part_a, part_b) = if b == 1 {
        (
            LaurentPoly::from_big_terms([(r, BigUint::from(a - 2)), (s, BigUint::one())]),
            LaurentPoly::monomial(r, 2),
        )
    } else {
        (
            LaurentPoly::from_big_terms([(r, BigUint::from(a - 1)), (s, BigUint::one())]),
            LaurentPoly::from_big_terms([(r, BigUint::one()), (s, BigUint::from(b - 1))]),
        )
    };
    Ok(finish(f, part_a, part_b, DecompositionTrace::new(Branch::Binomial)))
}

/// Splits f(1) = p + q by greedily moving units into the first part in
/// descending exponent order until its value reaches p.
pub fn decompose_by_prime_pair(
    f: &LaurentPoly,
    pair: PrimePair,
) -> Result<DecompositionResult, DecomposeError> {
    if !is_prime(pair.p) || !is_prime(pair.q) {
        return Err(DecomposeError::Precondition("pair members must be prime".into()));
    }
    let pair_sum = pair.p + pair.q;
    if f.evaluate_at_one() != BigUint::from(pair_sum) {
        return Err(DecomposeError::ValueMismatch { value: f.evaluate_at_one(), pair_sum });
    }
    let mut remaining = pair.p;
    let mut taken: Vec<(i64, u64)> = Vec::new();
    for t in f.terms() {
        if remaining == 0 {
            break;
        }
        let take = remaining.min(coeff_u64(&t.coefficient));
        taken.push((t.exponent, take));
        remaining -= take;
    }
    let part_a = LaurentPoly::from_big_terms(taken.into_iter().map(|(e, c)| (e, BigUint::from(c))));
    let part_b = f.subtract_checked(&part_a).expect("greedy fill stays below f");
    let mut trace = DecompositionTrace::new(Branch::PrimePair);
    trace.prime = Some(pair.p);
    Ok(finish(f, part_a, part_b, trace))
}

fn value_u64(f: &LaurentPoly) -> Result<u64, DecomposeError> {
    f.evaluate_at_one_u64()
        .ok_or_else(|| DecomposeError::ValueTooLarge { value: f.evaluate_at_one() })
}

/// Decomposes f (≥ 3 terms) against a prime p with 5f(1)/6 − 1 ≤ p ≤
/// f(1) − 2, producing a value-p part and an irreducible remainder.
pub fn decompose_nagura(
    f: &LaurentPoly,
    p: u64,
) -> Result<DecompositionResult, DecomposeError> {
    if f.support_size() < 3 {
        return Err(DecomposeError::TooFewTerms);
    }
    let value = value_u64(f)?;
    // exact integer window check: 6(p+1) >= 5 f(1) and p <= f(1) - 2
    if 6 * (p + 1) < 5 * value || p > value - 2 {
        return Err(DecomposeError::WindowViolation { value, prime: p });
    }
    let (g, h, si) = split_parts(f)?;
    let h1 = value_u64(&h)?;
    let mut trace = DecompositionTrace::new(Branch::Nagura)
        .with_poly("hyper_part", &g)
        .with_poly("remainder", &h);
    trace.prime = Some(p);
    trace.split = Some(si);

    if g.support_size() == 2 {
        let ((a, r), (b, s)) = binomial_parts(&g);
        assert!(p >= h1 + b, "window guarantees the value-p part fills up");
        let part_a = h.add(
            &LaurentPoly::from_big_terms([
                (s, BigUint::from(b - 1)),
                (r, BigUint::from(p - h1 - b + 1)),
            ]),
        );
        let part_b = LaurentPoly::from_big_terms([
            (r, BigUint::from(value - p - 1)),
            (s, BigUint::one()),
        ]);
        debug_assert_eq!(a + b + h1, value);
        return Ok(finish(f, part_a, part_b, trace));
    }

    let (_, k_j, c_j_big) = g.min_coefficient_term().expect("nonzero");
    let c_j = coeff_u64(&c_j_big);
    let reduced = g
        .subtract_checked(&LaurentPoly::from_big_terms([(k_j, BigUint::from(c_j - 1))]))
        .expect("removing c_j - 1 units keeps the term");
    assert!(p + 1 >= h1 + c_j, "window guarantees a nonnegative peel amount");
    let amount = p - h1 - c_j + 1;
    let (kept, removed) = peel_units(&reduced, amount)?;
    let part_a = h
        .add(&LaurentPoly::from_big_terms([(k_j, BigUint::from(c_j - 1))]))
        .add(&removed);
    trace.peel_amount = Some(amount);
    trace.min_coefficient = Some(c_j);
    trace = trace
        .with_poly("reduced", &reduced)
        .with_poly("kept", &kept)
        .with_poly("removed", &removed);
    Ok(finish(f, part_a, kept, trace))
}

/// First term index whose coefficient is at least `threshold`.
fn first_index_with_coefficient_at_least(f: &LaurentPoly, threshold: u64) -> Option<usize> {
    let threshold = BigUint::from(threshold);
    f.terms().iter().position(|t| t.coefficient >= threshold)
}

/// Handles the values {11, 17, 23, 27, 29}, which are not sums of two
/// primes, for polynomials with at least three terms.
pub fn decompose_small(f: &LaurentPoly) -> Result<DecompositionResult, DecomposeError> {
    let value = value_u64(f)?;
    if f.support_size() < 2 || ![11, 17, 23, 27, 29].contains(&value) {
        return Err(DecomposeError::Precondition(
            "small branch needs >= 2 terms and f(1) in {11, 17, 23, 27, 29}".into(),
        ));
    }
    let exponents: Vec<i64> = f.exponents().collect();

    let coefficient_split = |threshold: u64, j: usize| -> DecompositionResult {
        let t = if j == 0 { 1 } else { 0 };
        let g = LaurentPoly::from_terms([(exponents[j], threshold as i64), (exponents[t], 1)])
            .unwrap();
        let rest = f.subtract_checked(&g).expect("chosen coefficients are large enough");
        let mut trace = DecompositionTrace::new(Branch::SmallCoefficient).with_poly("extracted", &g);
        trace.prime = Some(value - threshold - 1);
        finish(f, rest, g, trace)
    };

    if value != 29 {
        if let Some(j) = first_index_with_coefficient_at_least(f, 3) {
            return Ok(coefficient_split(3, j));
        }
        // all coefficients <= 2: search index 4-tuples in lexicographic order
        // for a quadrinomial whose outer gaps differ
        let n = exponents.len();
        for i1 in 0..n {
            for i2 in i1 + 1..n {
                for i3 in i2 + 1..n {
                    for i4 in i3 + 1..n {
                        if exponents[i1] - exponents[i2] != exponents[i3] - exponents[i4] {
                            let g = LaurentPoly::from_terms([
                                (exponents[i1], 1),
                                (exponents[i2], 1),
                                (exponents[i3], 1),
                                (exponents[i4], 1),
                            ])
                            .unwrap();
                            let rest = f.subtract_checked(&g).expect("unit subtraction");
                            let mut trace = DecompositionTrace::new(Branch::SmallQuadrinomial)
                                .with_poly("extracted", &g);
                            trace.prime = Some(value - 4);
                            return Ok(finish(f, rest, g, trace));
                        }
                    }
                }
            }
        }
        unreachable!("a quadrinomial with unequal outer gaps always exists at these sizes");
    }

    // f(1) = 29
    if let Some(j) = first_index_with_coefficient_at_least(f, 5) {
        return Ok(coefficient_split(5, j));
    }
    let (g, h, si) = split_parts(f)?;
    let h1 = value_u64(&h)?;
    let (_, t_m, d_m_big) = g.min_coefficient_term().expect("nonzero");
    let d_m = coeff_u64(&d_m_big);
    let g_star = g
        .subtract_checked(&LaurentPoly::from_big_terms([(t_m, BigUint::from(d_m - 1))]))
        .expect("removing d_m - 1 units keeps the term");
    assert!(17 >= h1 + (d_m - 1), "h(1) <= 14 and d_m <= 4 bound the fill");
    let amount = 17 - h1 - (d_m - 1);
    let (kept, removed) = peel_units(&g_star, amount)?;
    let part_a = h
        .add(&removed)
        .add(&LaurentPoly::from_big_terms([(t_m, BigUint::from(d_m - 1))]));
    let mut trace = DecompositionTrace::new(Branch::SmallPeel)
        .with_poly("hyper_part", &g)
        .with_poly("remainder", &h)
        .with_poly("reduced", &g_star)
        .with_poly("kept", &kept)
        .with_poly("removed", &removed);
    trace.prime = Some(17);
    trace.split = Some(si);
    trace.peel_amount = Some(amount);
    trace.min_coefficient = Some(d_m);
    Ok(finish(f, part_a, kept, trace))
}

/// Writes any f with f(1) > 3 and more than one term as a sum of two
/// irreducibles of ℕ₀[x^±1], with certificates for both parts.
pub fn decompose(f: &LaurentPoly) -> Result<DecompositionResult, DecomposeError> {
    if f.support_size() <= 1 {
        return Err(DecomposeError::SupportTooSmall);
    }
    let value_big = f.evaluate_at_one();
    if value_big <= BigUint::from(3u32) {
        return Err(DecomposeError::NotCovered { value: value_big });
    }
    if f.support_size() == 2 {
        return decompose_binomial(f);
    }
    let value = value_u64(f)?;
    if value <= 31 {
        if let Some(pair) = crate::primes::goldbach_pair(value) {
            return decompose_by_prime_pair(f, pair);
        }
        return decompose_small(f);
    }
    let p = nagura_prime_for(value)?;
    decompose_nagura(f, p)
}
