//! Arithmetic-progression constructions: block decompositions of the
//! multiples of `q`, offset subsequences with exact identity witnesses,
//! and longest-AP search inside finite integer sets.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::error::{Error, ParseError, Result};
use crate::primorial::primorial;
use crate::textnum::parse_canonical_u64;

/// Consecutive blocks drawn from the progression `q, 2q, 3q, ...`.
///
/// With `d = primorial(k)`, block `j` (1-indexed) is
/// `(i * k^(j-1) * q * d)` for `i = 1..k-1`: the first block is
/// `(qd, 2qd, ..., (k-1)qd)`, the second `(kqd, 2kqd, ..., (k-1)kqd)`,
/// and so on. Each block is a [`polignac_window`] for `N = k^(j-1) * q`,
/// and every element is a multiple of `q`.
///
/// [`polignac_window`]: crate::admissible::polignac_window
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSequence {
    q: u64,
    k: u64,
    d: BigUint,
    blocks: Vec<Vec<BigUint>>,
}

impl BlockSequence {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `primorial(k)`.
    pub fn step_base(&self) -> &BigUint {
        &self.d
    }

    pub fn blocks(&self) -> &[Vec<BigUint>] {
        &self.blocks
    }
}

/// The first `block_count` blocks of the progression `q, 2q, ...`.
pub fn ap_blocks(q: u64, k: u64, block_count: u64) -> Result<BlockSequence> {
    if q < 1 {
        return Err(Error::InvalidArgument("blocks need q >= 1".into()));
    }
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "blocks need k >= 2, got k = {k}"
        )));
    }
    if block_count < 1 {
        return Err(Error::InvalidArgument("blocks need block_count >= 1".into()));
    }
    let d = primorial(k);
    let blocks = (0..block_count)
        .map(|j| {
            let multiplier = BigUint::from(k).pow(j) * q;
            (1..k).map(|i| &d * &multiplier * i).collect()
        })
        .collect();
    Ok(BlockSequence { q, k, d, blocks })
}

/// An offset progression `a, a + q, a + 2q, ...` (with `q | a`) together
/// with the indices `N_i = (a/q)(i*d - 1)` selecting the subsequence
/// `a + N_i q = a * i * d`, `d = primorial(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletSpec {
    a: u64,
    q: u64,
    k: u64,
    d: BigUint,
    n_values: Vec<BigUint>,
}

impl DirichletSpec {
    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `primorial(k)`.
    pub fn step_base(&self) -> &BigUint {
        &self.d
    }

    /// `N_1, N_2, ...` in order.
    pub fn n_values(&self) -> &[BigUint] {
        &self.n_values
    }

    /// Re-check the exact identity `a + N_i q = a * i * d` for every i.
    pub fn verify_identity(&self) -> bool {
        self.n_values.iter().enumerate().all(|(idx, n)| {
            let i = idx as u64 + 1;
            BigUint::from(self.a) + n * self.q == BigUint::from(self.a) * i * &self.d
        })
    }

    /// The selected subsequence terms `a + N_i q`.
    pub fn terms(&self) -> Vec<BigUint> {
        self.n_values
            .iter()
            .map(|n| BigUint::from(self.a) + n * self.q)
            .collect()
    }
}

/// Outcome of [`dirichlet_subsequence`]: the zero-offset case has no
/// index sequence and falls back to the block decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirichletResult {
    Offset(DirichletSpec),
    ZeroOffset(BlockSequence),
}

/// Select, inside the progression `a, a + q, a + 2q, ...` with `q | a`,
/// the first `count` subsequence indices `N_i = (a/q)(i*d - 1)`, verifying
/// the exact identity `a + N_i q = a * i * d` before returning.
///
/// `a = 0` is the plain multiples-of-q progression and is delegated to
/// [`ap_blocks`].
pub fn dirichlet_subsequence(a: u64, q: u64, k: u64, count: u64) -> Result<DirichletResult> {
    if q < 1 {
        return Err(Error::InvalidArgument("progression step q must be >= 1".into()));
    }
    if a == 0 {
        return Ok(DirichletResult::ZeroOffset(ap_blocks(q, k, count)?));
    }
    if a % q != 0 {
        return Err(Error::NotDivisible { a, q });
    }
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "subsequence needs k >= 2, got k = {k}"
        )));
    }
    if count < 1 {
        return Err(Error::InvalidArgument("subsequence needs count >= 1".into()));
    }
    let d = primorial(k);
    let ratio = a / q;
    let n_values = (1..=count)
        .map(|i| (&d * i - 1u32) * ratio)
        .collect();
    let spec = DirichletSpec {
        a,
        q,
        k,
        d,
        n_values,
    };
    assert!(
        spec.verify_identity(),
        "identity a + N_i*q = a*i*d failed for a={a}, q={q}, k={k}"
    );
    Ok(DirichletResult::Offset(spec))
}

/// An arithmetic progression found inside a source set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct APRun {
    pub start: u64,
    pub step: u64,
    pub length: u64,
}

impl APRun {
    /// The run's terms, in order.
    pub fn terms(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.length).map(move |t| self.start + t * self.step)
    }

    /// Every term is a member of `set` (which must be sorted ascending).
    pub fn verify(&self, set: &[u64]) -> bool {
        self.length >= 1
            && self.step >= 1
            && self.terms().all(|t| set.binary_search(&t).is_ok())
    }
}

/// Largest input size accepted by [`longest_ap_in_set`]; the pair DP is
/// quadratic.
pub const MAX_AP_SET_LEN: usize = 100_000;

/// A maximum-length arithmetic progression contained in `set` (strictly
/// ascending, nonempty). Ties break toward the smallest start, then the
/// smallest step; a singleton set yields a length-1 run with step 1.
///
/// Dynamic program over element pairs: a pair `(i, j)` extends the best
/// run ending at `(h, i)` whenever `set[i] - (set[j] - set[i])` is a
/// member `set[h]`.
pub fn longest_ap_in_set(set: &[u64]) -> Result<APRun> {
    if set.is_empty() {
        return Err(Error::InvalidArgument(
            "AP search needs a nonempty set".into(),
        ));
    }
    if set.len() > MAX_AP_SET_LEN {
        return Err(Error::SetTooLarge {
            len: set.len(),
            max: MAX_AP_SET_LEN,
        });
    }
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "AP search needs a strictly ascending set".into(),
        ));
    }
    if set.len() == 1 {
        return Ok(APRun {
            start: set[0],
            step: 1,
            length: 1,
        });
    }

    let index: HashMap<u64, usize> = set.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // run lengths > 2, keyed by the run's final element pair
    let mut run_len: HashMap<(u32, u32), u64> = HashMap::new();
    let mut best = APRun {
        start: set[0],
        step: set[1] - set[0],
        length: 2,
    };
    for j in 1..set.len() {
        for i in 0..j {
            let step = set[j] - set[i];
            let length = match set[i]
                .checked_sub(step)
                .and_then(|prev| index.get(&prev))
            {
                Some(&h) => run_len.get(&(h as u32, i as u32)).copied().unwrap_or(2) + 1,
                None => 2,
            };
            if length > 2 {
                run_len.insert((i as u32, j as u32), length);
            }
            let start = set[j] - step * (length - 1);
            if length > best.length
                || (length == best.length && (start, step) < (best.start, best.step))
            {
                best = APRun {
                    start,
                    step,
                    length,
                };
            }
        }
    }
    Ok(best)
}

/// Parse the integer-set text format: one canonical decimal per line,
/// strictly ascending, each line LF-terminated. Empty input is the empty
/// set.
pub fn parse_integer_set(text: &str) -> Result<Vec<u64>, ParseError> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let Some(body) = text.strip_suffix('\n') else {
        return Err(ParseError::new(
            text.lines().count().max(1),
            "missing final newline",
        ));
    };
    let mut values = Vec::new();
    for (offset, line) in body.split('\n').enumerate() {
        let line_no = offset + 1;
        let value = parse_canonical_u64(line, line_no, "integer")?;
        if let Some(&last) = values.last() {
            if value <= last {
                return Err(ParseError::new(
                    line_no,
                    "integers must be strictly ascending",
                ));
            }
        }
        values.push(value);
    }
    Ok(values)
}

/// Serialize to the integer-set text format.
pub fn render_integer_set(values: &[u64]) -> String {
    let mut out = String::new();
    for v in values {
        out.push_str(&format!("{v}\n"));
    }
    out
}
