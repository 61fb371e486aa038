//! Independent oracles shared by the integration suites.
//!
//! Everything here deliberately avoids the library's code paths: the sieve
//! is the classic unsegmented boolean array, admissibility checks every
//! prime up to max(H) + 1 instead of k, the cover constant is found by
//! trying every (m, C) pair, and AP search walks every (start, step) pair.

// not every test binary uses every oracle
#![allow(dead_code)]

use polignac::APRun;

/// Classic full-array sieve of Eratosthenes; primes `<= limit`.
pub fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = (limit + 1) as usize;
    let mut composite = vec![false; n];
    let mut i = 2usize;
    while i * i < n {
        if !composite[i] {
            let mut m = i * i;
            while m < n {
                composite[m] = true;
                m += i;
            }
        }
        i += 1;
    }
    (2..n).filter(|&i| !composite[i]).map(|i| i as u64).collect()
}

/// Admissibility by brute force over every prime up to max(H) + 1.
pub fn brute_force_admissible(values: &[u64]) -> bool {
    let cap = values.iter().max().copied().unwrap_or(0) + 1;
    brute_force_admissible_with(&simple_sieve(cap), values)
}

/// Same, with presieved primes; `primes` must cover max(H) + 1.
pub fn brute_force_admissible_with(primes: &[u64], values: &[u64]) -> bool {
    let cap = values.iter().max().copied().unwrap_or(0) + 1;
    for &p in primes.iter().take_while(|&&p| p <= cap) {
        let mut seen = vec![false; p as usize];
        for &v in values {
            seen[(v % p) as usize] = true;
        }
        if seen.iter().all(|&s| s) {
            return false;
        }
    }
    true
}

/// Smallest covering width by direct search over every (m, C) pair;
/// `None` when no position lies in `[0, m_max]`. Also returns every
/// start of a candidate-free interval at width `C - 1`.
pub fn brute_force_cover(positions: &[u64], m_max: u64) -> Option<(u64, Vec<u64>)> {
    if !positions.iter().any(|&p| p <= m_max) {
        return None;
    }
    let is_candidate = |v: u64| positions.binary_search(&v).is_ok();
    let interval_free = |m: u64, c: u64| (m..=m + c).all(|v| !is_candidate(v));
    let mut c = 0u64;
    loop {
        if (0..=m_max - c).all(|m| !interval_free(m, c)) {
            let witnesses = if c == 0 {
                Vec::new()
            } else {
                (0..=m_max - (c - 1))
                    .filter(|&m| interval_free(m, c - 1))
                    .collect()
            };
            return Some((c, witnesses));
        }
        c += 1;
    }
}

/// Longest AP by walking every (start, step) pair with membership tests;
/// same tie-break as the library (smallest start, then smallest step).
pub fn brute_force_longest_ap(set: &[u64]) -> APRun {
    assert!(!set.is_empty());
    if set.len() == 1 {
        return APRun {
            start: set[0],
            step: 1,
            length: 1,
        };
    }
    let mut best: Option<APRun> = None;
    for (i, &start) in set.iter().enumerate() {
        for &second in &set[i + 1..] {
            let step = second - start;
            let mut length = 2;
            while set.binary_search(&(start + length * step)).is_ok() {
                length += 1;
            }
            let candidate = APRun {
                start,
                step,
                length,
            };
            let better = best.as_ref().is_none_or(|b| {
                candidate.length > b.length
                    || (candidate.length == b.length
                        && (candidate.start, candidate.step) < (b.start, b.step))
            });
            if better {
                best = Some(candidate);
            }
        }
    }
    best.unwrap()
}
