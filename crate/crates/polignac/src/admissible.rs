//! Admissible k-tuples: testing with materialized evidence, the canonical
//! primorial-progression construction, and narrow-tuple search.
//!
//! A finite integer set is *admissible* when, for every prime `p`, it misses
//! at least one residue class mod `p`. Only primes `p <= k` ever need
//! checking: a k-element set cannot occupy all residue classes of a larger
//! prime. Verdicts are returned as evidence — a certificate of missed
//! residues, or a violation listing one occupant per residue class — so
//! every answer can be re-checked independently.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, ParseError, Result};
use crate::primorial::primorial;
use crate::sieve::{collect_primes, small_primes};

/// A strictly ascending tuple of nonnegative integers.
///
/// Elements are arbitrary-precision: the primorial-progression tuples
/// outgrow 64 bits well before `k = 59`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tuple {
    elements: Vec<BigUint>,
}

impl Tuple {
    /// Build a tuple from elements that must already be strictly ascending.
    pub fn new(elements: Vec<BigUint>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidArgument("tuple must be nonempty".into()));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "tuple elements must be strictly ascending".into(),
            ));
        }
        Ok(Tuple { elements })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn elements(&self) -> &[BigUint] {
        &self.elements
    }

    /// Tuple size `k`.
    pub fn k(&self) -> usize {
        self.elements.len()
    }

    /// Largest element minus smallest.
    pub fn diameter(&self) -> BigUint {
        self.elements.last().unwrap() - self.elements.first().unwrap()
    }

    /// Translate so the smallest element is 0. Admissibility is
    /// translation-invariant; this is the canonical form used for output.
    pub fn normalized(&self) -> Tuple {
        let min = self.elements.first().unwrap();
        Tuple {
            elements: self.elements.iter().map(|e| e - min).collect(),
        }
    }

    /// Parse the text form: comma-separated ascending decimal integers,
    /// e.g. `0,2,6`. No whitespace, no leading zeros; strictly canonical,
    /// so `parse` then `to_string` reproduces the input byte for byte.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.is_empty() {
            return Err(ParseError::new(1, "empty tuple text"));
        }
        let mut elements: Vec<BigUint> = Vec::new();
        for (idx, part) in text.split(',').enumerate() {
            if part.is_empty() {
                return Err(ParseError::new(1, format!("element {} is empty", idx + 1)));
            }
            if !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseError::new(
                    1,
                    format!("element {} is not a decimal integer", idx + 1),
                ));
            }
            if part.len() > 1 && part.starts_with('0') {
                return Err(ParseError::new(
                    1,
                    format!("element {} has a leading zero", idx + 1),
                ));
            }
            let value = BigUint::parse_bytes(part.as_bytes(), 10)
                .expect("digits already validated");
            if let Some(last) = elements.last() {
                if &value <= last {
                    return Err(ParseError::new(
                        1,
                        format!("element {} breaks strict ascending order", idx + 1),
                    ));
                }
            }
            elements.push(value);
        }
        Ok(Tuple { elements })
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

fn residue(element: &BigUint, p: u64) -> u64 {
    (element % p).to_u64().expect("residue fits u64")
}

/// One certificate entry: no tuple element is `missed_residue` mod `prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateEntry {
    pub prime: u64,
    pub missed_residue: u64,
}

/// A witnessed admissibility proof: for every prime `p <= k`, a residue
/// class mod `p` that the whole tuple misses. Primes above `k` need no
/// entry (k elements cannot cover more than k classes).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    entries: Vec<CertificateEntry>,
}

impl Certificate {
    pub fn entries(&self) -> &[CertificateEntry] {
        &self.entries
    }

    /// Re-check the certificate against a tuple: exactly one entry per
    /// prime `p <= k`, each witnessing a genuinely missed residue.
    pub fn verify(&self, tuple: &Tuple) -> bool {
        let expected = small_primes(tuple.k() as u64);
        if self.entries.len() != expected.len() {
            return false;
        }
        self.entries.iter().zip(expected).all(|(entry, p)| {
            entry.prime == p
                && entry.missed_residue < p
                && tuple
                    .elements()
                    .iter()
                    .all(|e| residue(e, p) != entry.missed_residue)
        })
    }
}

/// A witnessed inadmissibility proof: the tuple occupies every residue
/// class mod `prime`; `occupant(r)` is a tuple element `≡ r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    prime: u64,
    /// Index r holds an element congruent to r mod `prime`.
    occupants: Vec<BigUint>,
}

impl Violation {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// One tuple element per residue class, indexed by residue.
    pub fn occupants(&self) -> &[BigUint] {
        &self.occupants
    }

    /// Re-check the evidence: every residue class mod `prime` is hit by
    /// the listed tuple element.
    pub fn verify(&self, tuple: &Tuple) -> bool {
        self.occupants.len() == self.prime as usize
            && self.occupants.iter().enumerate().all(|(r, e)| {
                residue(e, self.prime) == r as u64 && tuple.elements().contains(e)
            })
    }
}

/// Outcome of an admissibility test; both variants carry re-checkable
/// evidence rather than a bare boolean.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    Admissible(Certificate),
    Inadmissible(Violation),
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Admissibility::Admissible(c) => Some(c),
            Admissibility::Inadmissible(_) => None,
        }
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Admissibility::Admissible(_) => None,
            Admissibility::Inadmissible(v) => Some(v),
        }
    }
}

/// Test a tuple for admissibility, checking only primes `p <= k`.
///
/// Returns a full certificate, or the violation at the smallest prime
/// whose residue classes the tuple covers completely.
pub fn is_admissible(tuple: &Tuple) -> Admissibility {
    let mut entries = Vec::new();
    for p in small_primes(tuple.k() as u64) {
        let mut occupant: Vec<Option<&BigUint>> = vec![None; p as usize];
        let mut occupied = 0usize;
        for e in tuple.elements() {
            let r = residue(e, p) as usize;
            if occupant[r].is_none() {
                occupant[r] = Some(e);
                occupied += 1;
            }
        }
        if occupied == p as usize {
            return Admissibility::Inadmissible(Violation {
                prime: p,
                occupants: occupant
                    .into_iter()
                    .map(|e| e.expect("all classes occupied").clone())
                    .collect(),
            });
        }
        let missed = occupant
            .iter()
            .position(|o| o.is_none())
            .expect("some class is unoccupied") as u64;
        entries.push(CertificateEntry {
            prime: p,
            missed_residue: missed,
        });
    }
    Admissibility::Admissible(Certificate { entries })
}

/// The tuple `{0, dN, 2dN, ..., (k-1)dN}` with `d = primorial(k)`.
///
/// Every element is divisible by every prime `p <= k`, so the tuple sits
/// in residue class 0 and misses all others; it is admissible for any
/// `k >= 1`, `n >= 1`.
pub fn primorial_progression(k: u64, n: u64) -> Result<Tuple> {
    if k < 1 || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "primorial progression needs k >= 1 and n >= 1, got k = {k}, n = {n}"
        )));
    }
    let step = primorial(k) * n;
    Tuple::new((0..k).map(|i| &step * i).collect())
}

/// The window `{dN, 2dN, ..., (k-1)dN}` of candidate gap values carried
/// by [`primorial_progression`]: the nonzero differences available inside
/// the tuple. Requires `k >= 2` so the window is nonempty.
pub fn polignac_window(k: u64, n: u64) -> Result<Vec<BigUint>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "window needs k >= 2, got k = {k}"
        )));
    }
    if n < 1 {
        return Err(Error::InvalidArgument("window needs n >= 1".into()));
    }
    let step = primorial(k) * n;
    Ok((1..k).map(|i| &step * i).collect())
}

/// Result of a narrow-tuple search. A miss is a reported outcome, not an
/// error: the caller asked whether the strategy reaches `max_diameter`.
#[derive(Debug, Clone)]
pub enum NarrowOutcome {
    Found {
        tuple: Tuple,
        certificate: Certificate,
    },
    Failed {
        reason: String,
    },
}

impl NarrowOutcome {
    pub fn tuple(&self) -> Option<&Tuple> {
        match self {
            NarrowOutcome::Found { tuple, .. } => Some(tuple),
            NarrowOutcome::Failed { .. } => None,
        }
    }
}

// Survivor pools beyond this span cost more than the consecutive-prime
// fallback is worth.
const GREEDY_POOL_SPAN_CAP: u64 = 4_000_000;

/// Greedy residue sieve over `0..=span`: for each prime `p <= k`, strike
/// the residue class holding the fewest survivors (smallest residue on
/// ties). Whatever remains misses one class per prime, so any k survivors
/// form an admissible tuple.
fn greedy_survivors(k: u64, span: u64) -> Vec<u64> {
    let mut alive: Vec<u64> = (0..=span).collect();
    for p in small_primes(k) {
        let mut class_counts = vec![0u64; p as usize];
        for &x in &alive {
            class_counts[(x % p) as usize] += 1;
        }
        let struck = class_counts
            .iter()
            .enumerate()
            .min_by_key(|&(r, &c)| (c, r))
            .map(|(r, _)| r as u64)
            .expect("p >= 2 classes");
        alive.retain(|&x| x % p != struck);
    }
    alive
}

/// First `k` consecutive primes strictly greater than `k`, normalized to
/// start at 0. Always admissible: none of them is 0 mod any `p <= k`.
fn consecutive_prime_tuple(k: u64) -> Option<Vec<u64>> {
    let mut hi = (4 * (k + 2)).max(64);
    loop {
        match collect_primes(k + 1, hi) {
            Ok(primes) if primes.len() as u64 >= k => {
                let base = primes[0];
                return Some(primes[..k as usize].iter().map(|p| p - base).collect());
            }
            Ok(_) => hi = hi.saturating_mul(2),
            Err(_) => return None, // ceiling reached; give up on this strategy
        }
    }
}

/// Search for an admissible k-tuple of diameter at most `max_diameter`.
///
/// Tries a greedy residue sieve over `[0, max_diameter]` and the
/// consecutive-prime fallback, keeps the narrower of the two, and
/// re-verifies the winner with [`is_admissible`] before reporting it.
pub fn narrow_tuple(k: u64, max_diameter: u64) -> Result<NarrowOutcome> {
    if k < 1 {
        return Err(Error::InvalidArgument("narrow search needs k >= 1".into()));
    }
    if max_diameter < k - 1 {
        return Ok(NarrowOutcome::Failed {
            reason: format!(
                "{k} distinct integers need diameter at least {}, \
                 which exceeds the bound {max_diameter}",
                k - 1
            ),
        });
    }

    let mut best: Option<Vec<u64>> = None;

    let span = max_diameter.min(GREEDY_POOL_SPAN_CAP);
    let survivors = greedy_survivors(k, span);
    if survivors.len() as u64 >= k {
        let k = k as usize;
        let start = (0..=survivors.len() - k)
            .min_by_key(|&i| survivors[i + k - 1] - survivors[i])
            .unwrap();
        let window = &survivors[start..start + k];
        let base = window[0];
        best = Some(window.iter().map(|x| x - base).collect());
    }

    if let Some(baseline) = consecutive_prime_tuple(k) {
        let diameter = *baseline.last().unwrap();
        if diameter <= max_diameter
            && best
                .as_ref()
                .is_none_or(|b| diameter < *b.last().unwrap())
        {
            best = Some(baseline);
        }
    }

    let Some(elements) = best else {
        return Ok(NarrowOutcome::Failed {
            reason: format!(
                "neither the greedy residue sieve nor consecutive primes \
                 produced an admissible {k}-tuple of diameter <= {max_diameter}"
            ),
        });
    };

    let tuple = Tuple::from_u64s(&elements)?;
    match is_admissible(&tuple) {
        Admissibility::Admissible(certificate) => {
            Ok(NarrowOutcome::Found { tuple, certificate })
        }
        Admissibility::Inadmissible(v) => Ok(NarrowOutcome::Failed {
            reason: format!(
                "candidate failed re-verification at prime {} (search bug)",
                v.prime()
            ),
        }),
    }
}
