//! Exact primorial computation.

use num_bigint::BigUint;
use num_traits::One;

use crate::sieve::small_primes;

/// The primorial `k#`: the product of all primes `p <= k`, exactly.
///
/// `k < 2` yields 1 (empty product). Always returns an arbitrary-precision
/// integer; `59#` is already about `1.9e21` and overflows 64 bits.
pub fn primorial(k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for p in small_primes(k) {
        acc *= p;
    }
    acc
}
