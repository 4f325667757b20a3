//! Deterministic primality testing and next-prime search.
//!
//! Uses the Miller-Rabin test with the first thirteen primes as witnesses,
//! which is a proven deterministic primality test for all integers below
//! 3,317,044,064,679,887,385,961,981 (Sorenson & Webster). Inputs that
//! cannot be certified within that range are rejected loudly instead of
//! silently degrading to a probabilistic answer.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Largest integer (exclusive) for which the fixed witness set is a proven
/// deterministic test.
pub fn certification_bound() -> BigUint {
    "3317044064679887385961981".parse().unwrap()
}

/// Largest lower bound accepted by [`next_prime`]; keeps the search result
/// inside the certified range with ample headroom for the prime gap.
pub fn next_prime_input_bound() -> BigUint {
    BigUint::from(33u32) * BigUint::from(10u32).pow(23)
}

/// Deterministic primality test for `n` below the certification bound.
pub fn is_prime(n: &BigUint) -> Result<bool> {
    if *n >= certification_bound() {
        return Err(Error::PrimalityRange {
            requested: n.to_string(),
            bound: certification_bound().to_string(),
        });
    }
    let two = BigUint::from(2u32);
    if *n < two {
        return Ok(false);
    }
    for &w in &WITNESSES {
        let w = BigUint::from(w);
        if *n == w {
            return Ok(true);
        }
        if (n % &w).is_zero() {
            return Ok(false);
        }
    }
    // n is odd and coprime to every witness; run the strong pseudoprime test.
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;
    'witness: for &w in &WITNESSES {
        let mut x = BigUint::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Smallest prime strictly greater than `lower`.
///
/// `lower` must be at least 1 and below [`next_prime_input_bound`]; outside
/// that range the certified witness set no longer applies and the call fails.
pub fn next_prime(lower: &BigUint) -> Result<BigUint> {
    if lower.is_zero() {
        return Err(Error::InvalidInput(
            "next_prime lower bound must be at least 1".into(),
        ));
    }
    if *lower >= next_prime_input_bound() {
        return Err(Error::PrimalityRange {
            requested: lower.to_string(),
            bound: next_prime_input_bound().to_string(),
        });
    }
    if *lower < BigUint::from(2u32) {
        return Ok(BigUint::from(2u32));
    }
    // First odd candidate above lower, then step by two.
    let mut candidate = lower + BigUint::one();
    if (&candidate % BigUint::from(2u32)).is_zero() {
        candidate += BigUint::one();
    }
    loop {
        if is_prime(&candidate)? {
            return Ok(candidate);
        }
        candidate += BigUint::from(2u32);
    }
}
