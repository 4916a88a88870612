//! Prime pairs and window primes behind the decomposition driver.
//!
//! Run with: cargo run --example prime_pairs

use laurent_goldbach::primes::{goldbach_pair, largest_prime_below, nagura_prime_for};

fn main() {
    println!("=== Prime Selection ===\n");

    println!("--- Sums of two primes for 4..=31 ---\n");
    let mut exceptional = Vec::new();
    for m in 4..=31u64 {
        match goldbach_pair(m) {
            Some(pair) => println!("{m:2} = {} + {}", pair.p, pair.q),
            None => {
                println!("{m:2} = (no pair of primes sums to this)");
                exceptional.push(m);
            }
        }
    }
    println!("\nvalues without a pair: {exceptional:?}");
    assert_eq!(exceptional, [11, 17, 23, 27, 29]);
    println!("(these five get dedicated constructions in the driver)\n");

    println!("--- Window primes for f(1) >= 32 ---\n");
    println!("the driver needs a prime p with 5v/6 - 1 <= p <= v - 2:");
    for v in [32u64, 33, 36, 38, 100, 1000, 49999] {
        let below = largest_prime_below(v);
        let p = nagura_prime_for(v).unwrap();
        let stepped = if p == below { "" } else { " (stepped past v-1)" };
        println!("v = {v:5}: largest prime below is {below:5}, window prime is {p:5}{stepped}");
        assert!(6 * (p + 1) >= 5 * v && p <= v - 2);
    }

    // why a second step can be needed: when the largest prime below v is
    // exactly v - 1, the remainder v - p = 1 would be a unit, not a summand
    println!("\nv = 32: 31 = v - 1, so the driver steps down to {}", nagura_prime_for(32).unwrap());
}
