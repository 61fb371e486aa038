//! Acceptance suite: one test per criterion, each printing a PASS line
//! once every check in it has held (run with `--nocapture` to see them;
//! the harness result line carries the same verdict either way).
//!
//! Expected values were computed with the independent oracles in
//! `common` before the library was built, and the relevant oracle runs
//! again inside each test.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use polignac::admissible::{is_admissible, narrow_tuple, polignac_window, primorial_progression, NarrowOutcome, Tuple};
use polignac::census::{density_lower_bound, interval_cover, CandidateSet, GapCensus};
use polignac::progressions::{ap_blocks, dirichlet_subsequence, longest_ap_in_set, DirichletResult};
use polignac::sieve::{prime_count, DEFAULT_SIEVE_CEILING};

fn pass(label: &str) {
    println!("ACCEPTANCE {label}: PASS");
}

fn assert_within(elapsed: Duration, budget: Duration, label: &str) {
    assert!(
        elapsed <= budget,
        "{label} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn criterion_01_sieve_count_matches_oracle() {
    let started = Instant::now();
    let oracle = common::simple_sieve(999_999).len() as u64;
    assert_eq!(oracle, 78_498, "oracle run before the build gave 78498");
    assert_eq!(prime_count(1_000_000).unwrap(), oracle);
    assert_within(started.elapsed(), Duration::from_secs(1), "criterion 1");
    pass("C01 sieve count below 10^6 = 78498, equal to oracle");
}

#[test]
fn criterion_02_census_conservation() {
    let started = Instant::now();
    for x in [1_000u64, 10_000, 1_000_000] {
        let census = GapCensus::compute(x).unwrap();
        let total: u64 = census.counts().values().sum();
        assert_eq!(total, census.prime_count() - 1, "x = {x}");
    }
    let census30 = GapCensus::compute(30).unwrap();
    let expect: BTreeMap<u64, u64> = [(1, 1), (2, 4), (4, 3), (6, 1)].into();
    assert_eq!(census30.counts(), &expect);
    assert_eq!(census30.prime_count(), 10);
    assert_within(started.elapsed(), Duration::from_secs(5), "criterion 2");
    pass("C02 census conservation at 10^3/10^4/10^6 and exact census(30)");
}

#[test]
fn criterion_03_census_determinism_across_workers_and_segments() {
    let started = Instant::now();
    let mut renderings = Vec::new();
    for workers in [1usize, 2, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .unwrap();
        for segment_size in [1u64 << 18, 1 << 20] {
            let census = pool
                .install(|| GapCensus::compute_with(10_000_000, segment_size, DEFAULT_SIEVE_CEILING))
                .unwrap();
            renderings.push(census.render());
        }
    }
    assert!(
        renderings.windows(2).all(|w| w[0] == w[1]),
        "census(10^7) renderings differ across workers/segments"
    );
    assert_within(started.elapsed(), Duration::from_secs(30), "criterion 3");
    pass("C03 census(10^7) byte-identical across workers {1,2,8} x 2 segment sizes");
}

/// Visit every strictly ascending k-tuple drawn from 0..=max_value.
fn each_ascending_tuple(max_value: u64, k: usize, f: &mut impl FnMut(&[u64])) {
    if (k as u64) > max_value + 1 {
        return;
    }
    let mut idx: Vec<u64> = (0..k as u64).collect();
    loop {
        f(&idx);
        let mut i = k as i64 - 1;
        while i >= 0 && idx[i as usize] == max_value - (k as u64 - 1 - i as u64) {
            i -= 1;
        }
        if i < 0 {
            return;
        }
        let i = i as usize;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[test]
fn criterion_04_admissibility_agrees_with_brute_force() {
    let small_primes = common::simple_sieve(51);
    let check = |values: &[u64]| {
        let tuple = Tuple::from_u64s(values).unwrap();
        let fast = is_admissible(&tuple).is_admissible();
        let brute = common::brute_force_admissible_with(&small_primes, values);
        assert_eq!(fast, brute, "disagreement on {values:?}");
    };

    let mut swept = 0u64;
    for k in 1..=6 {
        each_ascending_tuple(30, k, &mut |values| {
            check(values);
            swept += 1;
        });
    }
    assert_eq!(swept, 942_648, "exhaustive sweep size");

    let mut state = 0x243f6a8885a308d3u64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state >> 33
    };
    let mut sampled = 0;
    while sampled < 10_000 {
        let k = 1 + (next() % 8) as usize;
        let mut values: Vec<u64> = (0..k * 3).map(|_| next() % 51).collect();
        values.sort_unstable();
        values.dedup();
        values.truncate(k);
        check(&values);
        sampled += 1;
    }
    pass("C04 admissibility = brute force on 942648 exhaustive + 10^4 random tuples");
}

#[test]
fn criterion_05_primorial_progressions_all_admissible() {
    let mut cases = 0;
    for k in 1..=40u64 {
        for n in 1..=20u64 {
            let tuple = primorial_progression(k, n).unwrap();
            let verdict = is_admissible(&tuple);
            assert!(verdict.is_admissible(), "k = {k}, n = {n}");
            assert!(verdict.certificate().unwrap().verify(&tuple));
            cases += 1;
        }
    }
    assert_eq!(cases, 800);
    pass("C05 all 800 primorial progressions (k<=40, n<=20) admissible");
}

#[test]
fn criterion_06_narrow_59_tuple_within_600() {
    let started = Instant::now();
    let outcome = narrow_tuple(59, 600).unwrap();
    let NarrowOutcome::Found { tuple, certificate } = outcome else {
        panic!("no admissible 59-tuple of diameter <= 600 found");
    };
    assert_eq!(tuple.k(), 59);
    assert!(tuple.diameter() <= BigUint::from(600u32));
    assert!(certificate.verify(&tuple));
    let values: Vec<u64> = tuple
        .elements()
        .iter()
        .map(|e| e.to_u64().expect("diameter <= 600 fits u64"))
        .collect();
    assert!(
        common::brute_force_admissible(&values),
        "brute-force oracle rejects the tuple"
    );
    assert_within(started.elapsed(), Duration::from_secs(10), "criterion 6");
    pass("C06 admissible 59-tuple of diameter <= 600 found and oracle-verified");
}

#[test]
fn criterion_07_dirichlet_identity_exact_on_random_instances() {
    let mut state = 0x13198a2e03707344u64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state >> 33
    };
    for trial in 0..1000 {
        let q = 1 + next() % 1000;
        let a = q * (1 + next() % (1_000_000 / q));
        let k = 2 + next() % 59; // k <= 60
        let count = 1 + next() % 6;
        let result = dirichlet_subsequence(a, q, k, count).unwrap();
        let DirichletResult::Offset(spec) = result else {
            panic!("trial {trial}: nonzero offset must take the offset case");
        };
        // independent recomputation: d from the oracle sieve, both identity
        // sides multiplied out here
        let d_oracle = common::simple_sieve(k)
            .into_iter()
            .fold(BigUint::one(), |acc, p| acc * p);
        for (idx, n) in spec.n_values().iter().enumerate() {
            let i = idx as u64 + 1;
            let lhs = BigUint::from(a) + n * q;
            let rhs = BigUint::from(a) * i * &d_oracle;
            assert_eq!(lhs, rhs, "trial {trial}: a={a} q={q} k={k} i={i}");
        }
    }
    pass("C07 exact identity a + N_i*q = a*i*d on 1000 random instances");
}

#[test]
fn criterion_08_blocks_cohere_with_windows_and_progression() {
    for q in 1..=10u64 {
        for k in 2..=10u64 {
            let seq = ap_blocks(q, k, 4).unwrap();
            for (j0, block) in seq.blocks().iter().enumerate() {
                let n = k.pow(j0 as u32) * q;
                assert_eq!(
                    block,
                    &polignac_window(k, n).unwrap(),
                    "q={q} k={k} block {}",
                    j0 + 1
                );
                for v in block {
                    assert!(
                        (v % q) == BigUint::from(0u32),
                        "q={q} k={k}: {v} not on the progression"
                    );
                }
            }
        }
    }
    pass("C08 blocks equal windows (N = k^(j-1) q) and lie on q,2q,...");
}

#[test]
fn criterion_09_longest_ap_equals_brute_force() {
    let started = Instant::now();
    // all nonempty subsets of {1..12}
    for mask in 1u32..(1 << 12) {
        let set: Vec<u64> = (0..12)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| b as u64 + 1)
            .collect();
        let run = longest_ap_in_set(&set).unwrap();
        let oracle = common::brute_force_longest_ap(&set);
        assert_eq!(run.length, oracle.length, "set {set:?}");
        assert_eq!(run, oracle, "tie-break on {set:?}");
        assert!(run.verify(&set));
    }
    // 500 random sets, size <= 200, elements < 10^4
    let mut state = 0xa4093822299f31d0u64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state >> 33
    };
    for trial in 0..500 {
        let target = 1 + (next() % 200) as usize;
        let mut set: Vec<u64> = (0..target * 2).map(|_| next() % 10_000).collect();
        set.sort_unstable();
        set.dedup();
        set.truncate(target);
        let run = longest_ap_in_set(&set).unwrap();
        let oracle = common::brute_force_longest_ap(&set);
        assert_eq!(run.length, oracle.length, "trial {trial}");
        assert_eq!(run, oracle, "trial {trial}");
        assert!(run.verify(&set));
    }
    assert_within(started.elapsed(), Duration::from_secs(60), "criterion 9");
    pass("C09 AP search = brute force on 4095 subsets + 500 random sets");
}

#[test]
fn criterion_10_density_formula_exact() {
    let one = BigRational::new(1.into(), 1.into());
    let six_hundred = BigRational::new(600.into(), 1.into());
    assert_eq!(
        density_lower_bound(&one).unwrap(),
        BigRational::new(1.into(), 2.into())
    );
    assert_eq!(
        density_lower_bound(&six_hundred).unwrap(),
        BigRational::new(1.into(), 1200.into())
    );
    pass("C10 density floor exactly 1/2 at C=1 and 1/1200 at C=600");
}

#[test]
fn criterion_11_interval_cover_of_even_candidates() {
    let census = GapCensus::compute(1_000_000).unwrap();
    let candidates = CandidateSet::from_census(&census, 1)
        .unwrap()
        .without_gap_one();
    let outcome = interval_cover(candidates.gaps(), 100).unwrap();
    let report = *outcome.report().expect("even candidates exist in [0, 100]");

    assert!(report.verify(candidates.gaps()), "rescan invariant");
    let (oracle_c, oracle_witnesses) =
        common::brute_force_cover(candidates.gaps(), 100).unwrap();
    assert_eq!(report.c_emp, oracle_c, "scan vs (m, C) brute force");
    match report.worst_m {
        None => assert!(oracle_witnesses.is_empty()),
        Some(m) => assert!(oracle_witnesses.contains(&m)),
    }

    assert_eq!(
        report.c_emp, 2,
        "pinned target width 2 is unreachable: 94 never occurs as a gap \
         between consecutive primes below 10^6 (its first occurrence is \
         1100977 -> 1101071), so the even candidates in [0, 100] are \
         2..=92 and 96..=100, the interval [93, 95] is candidate-free, \
         and the minimal covering width is 3 (worst_m = 93); both the \
         rescan invariant and the brute-force oracle above confirm 3"
    );
    pass("C11 interval cover over even candidates of census(10^6)");
}

#[test]
fn criterion_12_census_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for x in [1_000u64, 1_000_000] {
        let census = GapCensus::compute(x).unwrap();
        let path = dir.path().join(format!("census-{x}.txt"));
        std::fs::write(&path, census.render()).unwrap();
        let read_back = std::fs::read_to_string(&path).unwrap();
        let parsed = GapCensus::parse(&read_back).unwrap();
        assert_eq!(parsed, census);
        assert_eq!(parsed.render(), read_back, "x = {x}: rewrite changed bytes");
    }
    pass("C12 census file write -> read -> rewrite byte-identical at 10^3 and 10^6");
}
