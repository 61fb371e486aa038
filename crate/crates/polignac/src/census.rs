//! Consecutive-prime gap census and the analyses built on it: candidate
//! gap sets, the empirical interval-cover constant, and exact density
//! figures.
//!
//! The census is the artifact's finite stand-in for Polignac data: it
//! counts how often each gap `p_{n+1} - p_n` occurs among primes up to a
//! bound `x`. Gap 1 (between 2 and 3) is counted like any other; analyses
//! that care only about even gaps drop it via
//! [`CandidateSet::without_gap_one`].
//!
//! Construction is parallel over sieve segments. Each segment reduces to a
//! summary (its first and last prime plus interior gap counts) and
//! summaries merge associatively — the boundary gap between two summaries
//! is recovered from the left one's last prime and the right one's first —
//! so the result is identical for any worker count or segment size.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, ParseError, Result};
use crate::sieve::{sieve_segment, small_primes, DEFAULT_SEGMENT_SIZE, DEFAULT_SIEVE_CEILING};

/// Multiset of gaps between consecutive primes `<= x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCensus {
    x: u64,
    prime_count: u64,
    counts: BTreeMap<u64, u64>,
}

#[derive(Debug, Clone, Default)]
struct GapSummary {
    first: Option<u64>,
    last: Option<u64>,
    prime_count: u64,
    counts: BTreeMap<u64, u64>,
}

fn summarize(primes: &[u64]) -> GapSummary {
    let mut counts = BTreeMap::new();
    for w in primes.windows(2) {
        *counts.entry(w[1] - w[0]).or_insert(0) += 1;
    }
    GapSummary {
        first: primes.first().copied(),
        last: primes.last().copied(),
        prime_count: primes.len() as u64,
        counts,
    }
}

// Associative: the boundary gap between `a` and `b` is reconstructed from
// a.last and b.first, so any grouping of adjacent summaries merges to the
// same totals.
fn merge(mut a: GapSummary, b: GapSummary) -> GapSummary {
    if let (Some(last), Some(first)) = (a.last, b.first) {
        *a.counts.entry(first - last).or_insert(0) += 1;
    }
    for (gap, count) in b.counts {
        *a.counts.entry(gap).or_insert(0) += count;
    }
    GapSummary {
        first: a.first.or(b.first),
        last: b.last.or(a.last),
        prime_count: a.prime_count + b.prime_count,
        counts: a.counts,
    }
}

impl GapCensus {
    /// Census of all gaps between consecutive primes `<= x`.
    pub fn compute(x: u64) -> Result<Self> {
        Self::compute_with(x, DEFAULT_SEGMENT_SIZE, DEFAULT_SIEVE_CEILING)
    }

    /// [`compute`](Self::compute) with explicit segmentation and ceiling.
    pub fn compute_with(x: u64, segment_size: u64, ceiling: u64) -> Result<Self> {
        if x > ceiling {
            return Err(Error::SieveCeiling {
                requested: x,
                ceiling,
            });
        }
        if segment_size < 2 {
            return Err(Error::InvalidArgument(format!(
                "segment size must be at least 2, got {segment_size}"
            )));
        }
        let hi = x
            .checked_add(1)
            .ok_or_else(|| Error::InvalidArgument("census bound too large".into()))?;
        let base = small_primes(if hi >= 4 { hi.isqrt() } else { 1 });

        let segments = hi.div_ceil(segment_size);
        let mut acc = GapSummary::default();
        // bounded chunks keep memory flat when segment_size is tiny
        const CHUNK: u64 = 1 << 16;
        let mut idx = 0u64;
        while idx < segments {
            let end = segments.min(idx + CHUNK);
            let partial = (idx..end)
                .into_par_iter()
                .map(|i| {
                    let lo = i * segment_size;
                    let seg_hi = hi.min(lo.saturating_add(segment_size));
                    summarize(&sieve_segment(lo, seg_hi, &base))
                })
                .reduce(GapSummary::default, merge);
            acc = merge(acc, partial);
            idx = end;
        }

        Ok(GapCensus {
            x,
            prime_count: acc.prime_count,
            counts: acc.counts,
        })
    }

    /// The census bound: gaps are counted among primes `<= x`.
    pub fn x(&self) -> u64 {
        self.x
    }

    /// Number of primes `<= x`.
    pub fn prime_count(&self) -> u64 {
        self.prime_count
    }

    /// Gap value → occurrence count, ascending, no zero entries.
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn count_for(&self, gap: u64) -> u64 {
        self.counts.get(&gap).copied().unwrap_or(0)
    }

    /// Serialize to the canonical census text format:
    ///
    /// ```text
    /// POLIGNAC-CENSUS v1
    /// x=<decimal>
    /// primes=<decimal>
    /// <gap>,<count>      (one line per gap, ascending)
    /// ```
    ///
    /// LF line endings, no trailing whitespace, single final LF.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("POLIGNAC-CENSUS v1\n");
        out.push_str(&format!("x={}\n", self.x));
        out.push_str(&format!("primes={}\n", self.prime_count));
        for (gap, count) in &self.counts {
            out.push_str(&format!("{gap},{count}\n"));
        }
        out
    }

    /// Parse the canonical census text format.
    ///
    /// Strict by design: exactly the output of [`render`](Self::render) is
    /// accepted (canonical decimals, ascending gaps, LF endings), and the
    /// census invariants are re-checked — gaps other than 1 must be even,
    /// counts must be nonzero and sum to `primes - 1`. Accepted input
    /// re-renders byte-identically.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let Some(body) = text.strip_suffix('\n') else {
            return Err(ParseError::new(
                text.lines().count().max(1),
                "missing final newline",
            ));
        };
        let mut lines = body.split('\n');

        let header = lines.next().unwrap_or("");
        if header != "POLIGNAC-CENSUS v1" {
            return Err(ParseError::new(1, "expected header 'POLIGNAC-CENSUS v1'"));
        }
        let x = parse_field(lines.next(), "x", 2)?;
        let prime_count = parse_field(lines.next(), "primes", 3)?;

        let mut counts = BTreeMap::new();
        let mut last_gap = 0u64;
        let mut total: u64 = 0;
        for (offset, line) in lines.enumerate() {
            let line_no = 4 + offset;
            let (gap_text, count_text) = line
                .split_once(',')
                .ok_or_else(|| ParseError::new(line_no, "expected '<gap>,<count>'"))?;
            let gap = parse_decimal(gap_text, line_no, "gap")?;
            let count = parse_decimal(count_text, line_no, "count")?;
            if gap <= last_gap {
                return Err(ParseError::new(line_no, "gaps must be strictly ascending"));
            }
            if gap != 1 && gap % 2 != 0 {
                return Err(ParseError::new(line_no, "gap other than 1 must be even"));
            }
            if count == 0 {
                return Err(ParseError::new(line_no, "zero counts are not stored"));
            }
            total = total
                .checked_add(count)
                .ok_or_else(|| ParseError::new(line_no, "count total overflows"))?;
            last_gap = gap;
            counts.insert(gap, count);
        }

        let expected_total = prime_count.saturating_sub(1);
        if total != expected_total {
            return Err(ParseError::new(
                1,
                format!("gap counts sum to {total}, expected primes-1 = {expected_total}"),
            ));
        }

        Ok(GapCensus {
            x,
            prime_count,
            counts,
        })
    }
}

use crate::textnum::parse_canonical_u64 as parse_decimal;

fn parse_field(line: Option<&str>, key: &str, line_no: usize) -> Result<u64, ParseError> {
    let line = line.ok_or_else(|| ParseError::new(line_no, format!("missing '{key}=' line")))?;
    let value = line
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| ParseError::new(line_no, format!("expected '{key}=<decimal>'")))?;
    parse_decimal(value, line_no, key)
}

/// Gap values occurring at least `threshold` times in a census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    threshold: u64,
    source_x: u64,
    gaps: Vec<u64>,
}

impl CandidateSet {
    pub fn from_census(census: &GapCensus, threshold: u64) -> Result<Self> {
        if threshold < 1 {
            return Err(Error::InvalidArgument(
                "candidate threshold must be at least 1".into(),
            ));
        }
        Ok(CandidateSet {
            threshold,
            source_x: census.x(),
            gaps: census
                .counts()
                .iter()
                .filter(|&(_, &count)| count >= threshold)
                .map(|(&gap, _)| gap)
                .collect(),
        })
    }

    /// Drop the odd gap 1 (the 2→3 gap). Polignac analyses concern even
    /// gaps only; every other census gap is already even.
    pub fn without_gap_one(&self) -> CandidateSet {
        CandidateSet {
            threshold: self.threshold,
            source_x: self.source_x,
            gaps: self.gaps.iter().copied().filter(|&g| g != 1).collect(),
        }
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn source_x(&self) -> u64 {
        self.source_x
    }

    /// Ascending, duplicate-free gap values.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }
}

/// Result of an interval-cover scan over candidate positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverReport {
    /// Smallest width such that every interval `[m, m + c_emp]` inside
    /// `[0, m_max]` contains a candidate.
    pub c_emp: u64,
    /// Scan bound.
    pub m_max: u64,
    /// Start of a candidate-free interval of width `c_emp - 1`; `None`
    /// exactly when `c_emp` is 0.
    pub worst_m: Option<u64>,
}

/// Interval-cover outcome; no candidates inside `[0, m_max]` is a
/// reported condition, not an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverOutcome {
    Report(CoverReport),
    NoCandidates { m_max: u64 },
}

impl CoverOutcome {
    pub fn report(&self) -> Option<&CoverReport> {
        match self {
            CoverOutcome::Report(r) => Some(r),
            CoverOutcome::NoCandidates { .. } => None,
        }
    }
}

/// Smallest `C` such that every interval `[m, m + C]` contained in
/// `[0, m_max]` holds at least one of `positions`.
///
/// One pass over the sorted positions: the leading boundary forces
/// `C >= first`, a consecutive pair `(a, b)` forces `C >= b - a - 1`
/// (witnessed by the interval starting at `a + 1`), and the trailing
/// boundary forces `C >= m_max - last`. On ties the latest witness wins.
pub fn interval_cover(positions: &[u64], m_max: u64) -> Result<CoverOutcome> {
    if positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "candidate positions must be strictly ascending".into(),
        ));
    }
    let in_range: Vec<u64> = positions.iter().copied().filter(|&p| p <= m_max).collect();
    let (Some(&first), Some(&last)) = (in_range.first(), in_range.last()) else {
        return Ok(CoverOutcome::NoCandidates { m_max });
    };

    let mut c_emp = 0u64;
    let mut worst_m = None;
    let mut consider = |width: u64, witness: u64| {
        if width > 0 && width >= c_emp {
            c_emp = width;
            worst_m = Some(witness);
        }
    };
    consider(first, 0);
    for w in in_range.windows(2) {
        consider(w[1] - w[0] - 1, w[0] + 1);
    }
    consider(m_max - last, last + 1);

    Ok(CoverOutcome::Report(CoverReport {
        c_emp,
        m_max,
        worst_m,
    }))
}

impl CoverReport {
    /// Rescan check: no interval of width `c_emp` inside `[0, m_max]` is
    /// candidate-free, and the reported worst interval of width
    /// `c_emp - 1` is.
    pub fn verify(&self, positions: &[u64]) -> bool {
        let in_range: Vec<u64> = positions.iter().copied().filter(|&p| p <= self.m_max).collect();
        if in_range.is_empty() {
            return false;
        }
        let contains = |lo: u64, hi: u64| {
            // any candidate in [lo, hi]?
            let i = in_range.partition_point(|&p| p < lo);
            in_range.get(i).is_some_and(|&p| p <= hi)
        };
        // sufficiency of c_emp
        if self.c_emp <= self.m_max {
            for m in 0..=(self.m_max - self.c_emp) {
                if !contains(m, m + self.c_emp) {
                    return false;
                }
            }
        }
        // necessity, witnessed by worst_m
        match self.worst_m {
            None => self.c_emp == 0,
            Some(m) => {
                self.c_emp > 0
                    && m + (self.c_emp - 1) <= self.m_max
                    && !contains(m, m + (self.c_emp - 1))
            }
        }
    }
}

/// The analytic density floor `1 / (2C)`, exactly.
pub fn density_lower_bound(c: &BigRational) -> Result<BigRational> {
    if *c <= BigRational::zero() {
        return Err(Error::InvalidArgument(
            "cover constant must be positive".into(),
        ));
    }
    Ok(BigRational::new(BigInt::from(1), BigInt::from(2)) / c)
}

/// The finite density `|S ∩ [0, n]| / n`, exactly.
pub fn empirical_density(positions: &[u64], n: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "density denominator must be positive".into(),
        ));
    }
    let count = positions.iter().filter(|&&p| p <= n).count();
    Ok(BigRational::new(BigInt::from(count), BigInt::from(n)))
}
