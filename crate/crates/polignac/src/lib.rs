//! Computational machinery around prime gaps and Polignac numbers:
//! a segmented prime sieve, admissible k-tuple testing with re-checkable
//! evidence, a consecutive-prime gap census with exact persistence, and
//! the arithmetic-progression constructions built on top of them.
//!
//! Everything numeric is exact — arbitrary-precision integers for tuple
//! elements and primorials, exact rationals for densities. Parallel
//! construction (sieving, census merging) is deterministic: results are
//! identical for any worker count or segment size.

pub mod admissible;
pub mod census;
pub mod error;
pub mod primorial;
pub mod progressions;
pub mod sieve;
mod textnum;

pub use admissible::{
    is_admissible, narrow_tuple, polignac_window, primorial_progression, Admissibility,
    Certificate, NarrowOutcome, Tuple, Violation,
};
pub use census::{
    density_lower_bound, empirical_density, interval_cover, CandidateSet, CoverOutcome,
    CoverReport, GapCensus,
};
pub use error::{Error, ParseError, Result};
pub use primorial::primorial;
pub use progressions::{
    ap_blocks, dirichlet_subsequence, longest_ap_in_set, parse_integer_set, render_integer_set,
    APRun, BlockSequence, DirichletResult, DirichletSpec,
};
pub use sieve::{
    collect_primes, prime_count, primes_in_range, primes_in_range_capped, PrimeSegment,
    PrimeSegments, DEFAULT_SEGMENT_SIZE, DEFAULT_SIEVE_CEILING,
};
