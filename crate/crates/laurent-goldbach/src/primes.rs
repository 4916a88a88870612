//! Primality utilities and the prime-selection rules the decomposition
//! driver relies on: trial division, downward prime scans, Goldbach pair
//! search, and the Nagura-window prime pick.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimesError {
    #[error("no prime r with 6(r+1) >= 5*{value} and r <= {value} - 2 was found (candidate {candidate})")]
    WindowViolation { value: u64, candidate: u64 },
}

/// A pair of primes p ≤ q with a fixed sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePair {
    pub p: u64,
    pub q: u64,
}

/// Deterministic trial division with a 2/3/5 wheel. Inputs at the scales
/// used here are tiny, so no sieve is needed.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5] {
        if n % p == 0 {
            return n == p;
        }
    }
    // wheel increments mod 30 starting from 7
    const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut d = 7u64;
    let mut i = 0;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += WHEEL[i];
        i = (i + 1) % WHEEL.len();
    }
    true
}

/// Largest prime strictly less than `n`. Requires n ≥ 3.
pub fn largest_prime_below(n: u64) -> u64 {
    assert!(n >= 3, "largest_prime_below requires n >= 3");
    let mut c = n - 1;
    loop {
        if is_prime(c) {
            return c;
        }
        c -= 1;
    }
}

/// The Goldbach pair of `m` with the smallest p, or `None` when no pair of
/// primes sums to `m`. Requires m ≥ 4.
pub fn goldbach_pair(m: u64) -> Option<PrimePair> {
    assert!(m >= 4, "goldbach_pair requires m >= 4");
    let mut p = 2u64;
    while p <= m / 2 {
        if is_prime(p) && is_prime(m - p) {
            return Some(PrimePair { p, q: m - p });
        }
        p += 1;
    }
    None
}

/// Picks the prime used by the large-value decomposition branch.
///
/// Takes the largest prime p below `v`; if p = v − 1, steps down once more.
/// The result r is checked to satisfy 6(r+1) ≥ 5v and r ≤ v − 2 (the
/// comparison is exact integer arithmetic, never floating point). The check
/// can only fail if the underlying prime-gap bound failed, which does not
/// happen for any v ≥ 32.
pub fn nagura_prime_for(v: u64) -> Result<u64, PrimesError> {
    assert!(v >= 32, "nagura_prime_for requires v >= 32");
    let p = largest_prime_below(v);
    let r = if p <= v - 2 { p } else { largest_prime_below(p) };
    if 6 * (r + 1) >= 5 * v && r <= v - 2 {
        Ok(r)
    } else {
        Err(PrimesError::WindowViolation { value: v, candidate: r })
    }
}

/// All primes ≤ `n` by a plain sieve of Eratosthenes. Used by the
/// desk-scale window verifications, where many queries amortize the sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for c in 2..=n {
        if !composite[c] {
            primes.push(c as u64);
            let mut m = c * c;
            while m <= n {
                composite[m] = true;
                m += c;
            }
        }
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn is_prime_small_values() {
        assert!(is_prime(31));
        assert!(!is_prime(1));
        assert!(!is_prime(27));
        assert!(is_prime(2));
        assert!(!is_prime(0));
        assert!(is_prime(49999));
        assert!(!is_prime(49997)); // 17^2 * 173
    }

    #[test]
    fn is_prime_matches_sieve_below_10000() {
        let primes = primes_up_to(10_000);
        let mut next = primes.iter().copied().peekable();
        for n in 0..=10_000u64 {
            let expected = next.peek() == Some(&n);
            if expected {
                next.next();
            }
            assert_eq!(is_prime(n), expected, "disagreement at {n}");
        }
    }

    #[test]
    fn largest_prime_below_scans_down() {
        assert_eq!(largest_prime_below(32), 31);
        assert_eq!(largest_prime_below(3), 2);
        assert_eq!(largest_prime_below(38), 37);
        assert_eq!(largest_prime_below(31), 29);
    }

    #[test]
    fn goldbach_pair_minimal_p() {
        assert_eq!(goldbach_pair(10), Some(PrimePair { p: 3, q: 7 }));
        assert_eq!(goldbach_pair(4), Some(PrimePair { p: 2, q: 2 }));
        assert_eq!(goldbach_pair(11), None);
    }

    #[test]
    fn goldbach_gaps_in_4_to_31() {
        let exceptional = [11u64, 17, 23, 27, 29];
        for m in 4..=31u64 {
            let missing = goldbach_pair(m).is_none();
            assert_eq!(missing, exceptional.contains(&m), "value {m}");
        }
    }

    #[test]
    fn nagura_prime_examples() {
        assert_eq!(nagura_prime_for(36), Ok(31));
        assert_eq!(nagura_prime_for(32), Ok(29)); // 31 = 32-1 forces a second step
        assert_eq!(nagura_prime_for(38), Ok(31)); // 37 = 38-1 forces a second step
    }
}
