//! Segmented sieve of Eratosthenes over `[lo, hi)` ranges.
//!
//! Segments are sieved with odd-only storage so a segment stays cache
//! resident, and may be sieved by parallel workers; results are always
//! merged back in range order, so the emitted prime stream is identical
//! regardless of segment size and worker count.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest `hi` accepted by default. Ranges beyond this are refused
/// rather than degraded.
pub const DEFAULT_SIEVE_CEILING: u64 = 10_000_000_000;

/// Segment width used by the convenience entry points.
pub const DEFAULT_SEGMENT_SIZE: u64 = 1 << 20;

/// Primes of one contiguous sub-range `[lo, hi)`.
///
/// Concatenating the segments emitted for a range yields exactly the
/// primes of that range, ascending, with no loss or duplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSegment {
    /// Inclusive lower bound of the sub-range.
    pub lo: u64,
    /// Exclusive upper bound of the sub-range.
    pub hi: u64,
    /// Ascending primes in `[lo, hi)`.
    pub primes: Vec<u64>,
}

/// Simple odd-only sieve for the base primes up to `limit` (inclusive).
///
/// Only ever called with `limit <= sqrt(ceiling)`, so the bitmap is small.
pub(crate) fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut primes = vec![2];
    if limit < 3 {
        return primes;
    }
    // index i represents the odd number 2i + 3
    let n_odd = ((limit - 1) / 2) as usize;
    let mut composite = vec![false; n_odd];
    let mut i = 0usize;
    while {
        let p = 2 * i as u64 + 3;
        p * p <= limit
    } {
        if !composite[i] {
            let p = 2 * i as u64 + 3;
            let mut m = p * p;
            while m <= limit {
                composite[((m - 3) / 2) as usize] = true;
                m += 2 * p;
            }
        }
        i += 1;
    }
    primes.extend(
        composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| 2 * i as u64 + 3),
    );
    primes
}

/// Sieve one segment `[lo, hi)` given base primes covering `sqrt(hi)`.
pub(crate) fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    let mut primes = Vec::new();
    if hi <= lo {
        return primes;
    }
    if lo <= 2 && 2 < hi {
        primes.push(2);
    }
    // first odd candidate >= max(lo, 3)
    let first = {
        let f = lo.max(3);
        f + (f % 2 == 0) as u64
    };
    if first >= hi {
        return primes;
    }
    let n_odd = ((hi - first) as usize).div_ceil(2);
    let mut composite = vec![false; n_odd];
    for &p in base.iter().skip(1) {
        // skip(1): even multiples never land on odd candidates
        if p * p >= hi {
            break;
        }
        let mut m = p * p;
        if m < first {
            m = first.div_ceil(p) * p;
            if m % 2 == 0 {
                m += p;
            }
        }
        while m < hi {
            composite[((m - first) / 2) as usize] = true;
            m += 2 * p;
        }
    }
    primes.extend(
        composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| first + 2 * i as u64),
    );
    primes
}

/// Streaming iterator over the prime segments of `[lo, hi)`.
///
/// Upcoming segments are sieved in parallel batches sized to the worker
/// pool, then yielded strictly in range order.
#[derive(Debug)]
pub struct PrimeSegments {
    base: Vec<u64>,
    cursor: u64,
    hi: u64,
    segment_size: u64,
    buffer: VecDeque<PrimeSegment>,
}

impl PrimeSegments {
    fn refill(&mut self) {
        let batch = rayon::current_num_threads().max(1) * 2;
        let mut bounds = Vec::with_capacity(batch);
        while bounds.len() < batch && self.cursor < self.hi {
            let next = self.hi.min(self.cursor.saturating_add(self.segment_size));
            bounds.push((self.cursor, next));
            self.cursor = next;
        }
        let base = &self.base;
        self.buffer.extend(
            bounds
                .into_par_iter()
                .map(|(lo, hi)| PrimeSegment {
                    lo,
                    hi,
                    primes: sieve_segment(lo, hi, base),
                })
                .collect::<Vec<_>>(),
        );
    }
}

impl Iterator for PrimeSegments {
    type Item = PrimeSegment;

    fn next(&mut self) -> Option<PrimeSegment> {
        if self.buffer.is_empty() && self.cursor < self.hi {
            self.refill();
        }
        self.buffer.pop_front()
    }
}

/// Stream the primes of `[lo, hi)` in segments of `segment_size`,
/// refusing ranges past [`DEFAULT_SIEVE_CEILING`].
pub fn primes_in_range(lo: u64, hi: u64, segment_size: u64) -> Result<PrimeSegments> {
    primes_in_range_capped(lo, hi, segment_size, DEFAULT_SIEVE_CEILING)
}

/// Same as [`primes_in_range`] with an explicit ceiling.
pub fn primes_in_range_capped(
    lo: u64,
    hi: u64,
    segment_size: u64,
    ceiling: u64,
) -> Result<PrimeSegments> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!(
            "range start {lo} exceeds range end {hi}"
        )));
    }
    if segment_size < 2 {
        return Err(Error::InvalidArgument(format!(
            "segment size must be at least 2, got {segment_size}"
        )));
    }
    if hi > ceiling {
        return Err(Error::SieveCeiling {
            requested: hi,
            ceiling,
        });
    }
    let base_limit = if hi >= 4 { hi.isqrt() } else { 1 };
    Ok(PrimeSegments {
        base: small_primes(base_limit),
        cursor: lo,
        hi,
        segment_size,
        buffer: VecDeque::new(),
    })
}

/// All primes in `[lo, hi)` as one vector.
pub fn collect_primes(lo: u64, hi: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for seg in primes_in_range(lo, hi, DEFAULT_SEGMENT_SIZE)? {
        out.extend(seg.primes);
    }
    Ok(out)
}

/// Number of primes strictly below `hi`.
pub fn prime_count(hi: u64) -> Result<u64> {
    let mut n = 0u64;
    for seg in primes_in_range(0, hi, DEFAULT_SEGMENT_SIZE)? {
        n += seg.primes.len() as u64;
    }
    Ok(n)
}
