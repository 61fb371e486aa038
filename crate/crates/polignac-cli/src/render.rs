//! Output rendering: every subcommand can print a human-readable table,
//! CSV rows, or a single JSON object. Big integers are always rendered in
//! full decimal; rationals as `numer/denom` (or a bare integer when the
//! denominator is 1). The JSON key schemas are listed in the README.

use clap::ValueEnum;
use num_rational::BigRational;
use serde_json::{json, Value};

use polignac::admissible::{Admissibility, Certificate, NarrowOutcome, Tuple, Violation};
use polignac::census::{CandidateSet, CoverReport, GapCensus};
use polignac::progressions::{APRun, BlockSequence, DirichletSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

fn finish_json(value: Value) -> String {
    format!("{value}\n")
}

fn cert_json(cert: &Certificate) -> Value {
    Value::Array(
        cert.entries()
            .iter()
            .map(|e| json!([e.prime, e.missed_residue]))
            .collect(),
    )
}

fn cert_table(cert: &Certificate, out: &mut String) {
    for e in cert.entries() {
        out.push_str(&format!(
            "  p={} misses residue {}\n",
            e.prime, e.missed_residue
        ));
    }
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "prime": v.prime(),
        "occupants": v
            .occupants()
            .iter()
            .enumerate()
            .map(|(r, e)| json!([r as u64, e.to_string()]))
            .collect::<Vec<_>>(),
    })
}

pub fn census(census: &GapCensus, format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!("{:<8} {}\n", "x", census.x()));
            out.push_str(&format!("{:<8} {}\n", "primes", census.prime_count()));
            out.push_str(&format!("{:<8} {}\n", "gap", "count"));
            for (gap, count) in census.counts() {
                out.push_str(&format!("{gap:<8} {count}\n"));
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for (gap, count) in census.counts() {
                out.push_str(&format!("{gap},{count}\n"));
            }
            out
        }
        Format::Json => finish_json(json!({
            "op": "census",
            "x": census.x(),
            "prime_count": census.prime_count(),
            "counts": census.counts().iter().map(|(g, c)| json!([g, c])).collect::<Vec<_>>(),
        })),
    }
}

pub fn candidates(set: &CandidateSet, format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!("{:<10} {}\n", "source_x", set.source_x()));
            out.push_str(&format!("{:<10} {}\n", "min_count", set.threshold()));
            let gaps: Vec<String> = set.gaps().iter().map(|g| g.to_string()).collect();
            out.push_str(&format!("{:<10} {}\n", "gaps", gaps.join(",")));
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for gap in set.gaps() {
                out.push_str(&format!("{gap}\n"));
            }
            out
        }
        Format::Json => finish_json(json!({
            "op": "candidates",
            "source_x": set.source_x(),
            "min_count": set.threshold(),
            "gaps": set.gaps(),
        })),
    }
}

pub fn cover(report: &CoverReport, format: Format) -> String {
    let worst = report
        .worst_m
        .map(|m| m.to_string())
        .unwrap_or_else(|| "none".into());
    match format {
        Format::Table => format!(
            "{:<8} {}\n{:<8} {}\n{:<8} {}\n",
            "m_max", report.m_max, "c_emp", report.c_emp, "worst_m", worst
        ),
        Format::Csv => format!(
            "{},{},{}\n",
            report.c_emp,
            report.worst_m.map(|m| m.to_string()).unwrap_or_default(),
            report.m_max
        ),
        Format::Json => finish_json(json!({
            "op": "cover",
            "m_max": report.m_max,
            "c_emp": report.c_emp,
            "worst_m": report.worst_m,
        })),
    }
}

pub fn density_analytic(c: &BigRational, bound: &BigRational, format: Format) -> String {
    match format {
        Format::Table | Format::Csv => format!("{bound}\n"),
        Format::Json => finish_json(json!({
            "op": "density",
            "mode": "analytic",
            "c": c.to_string(),
            "bound": bound.to_string(),
        })),
    }
}

pub fn density_empirical(
    set: &CandidateSet,
    n: u64,
    count: u64,
    density: &BigRational,
    format: Format,
) -> String {
    match format {
        Format::Table | Format::Csv => format!("{density}\n"),
        Format::Json => finish_json(json!({
            "op": "density",
            "mode": "empirical",
            "source_x": set.source_x(),
            "min_count": set.threshold(),
            "n": n,
            "count": count,
            "density": density.to_string(),
        })),
    }
}

pub fn admissible(tuple: &Tuple, verdict: &Admissibility, format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!("{:<11} {}\n", "tuple", tuple));
            match verdict {
                Admissibility::Admissible(cert) => {
                    out.push_str(&format!("{:<11} {}\n", "admissible", "yes"));
                    cert_table(cert, &mut out);
                }
                Admissibility::Inadmissible(v) => {
                    out.push_str(&format!("{:<11} {}\n", "admissible", "no"));
                    out.push_str(&format!("violating prime {}\n", v.prime()));
                    for (r, e) in v.occupants().iter().enumerate() {
                        out.push_str(&format!("  residue {r}: element {e}\n"));
                    }
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            match verdict {
                Admissibility::Admissible(cert) => {
                    for e in cert.entries() {
                        out.push_str(&format!(
                            "certificate,{},{}\n",
                            e.prime, e.missed_residue
                        ));
                    }
                    if cert.entries().is_empty() {
                        out.push_str("certificate,,\n"); // k = 1: no primes to check
                    }
                }
                Admissibility::Inadmissible(v) => {
                    for (r, e) in v.occupants().iter().enumerate() {
                        out.push_str(&format!("violation,{},{},{}\n", v.prime(), r, e));
                    }
                }
            }
            out
        }
        Format::Json => {
            let mut obj = json!({
                "op": "admissible",
                "tuple": tuple.to_string(),
                "admissible": verdict.is_admissible(),
            });
            match verdict {
                Admissibility::Admissible(cert) => {
                    obj["certificate"] = cert_json(cert);
                }
                Admissibility::Inadmissible(v) => {
                    obj["violation"] = violation_json(v);
                }
            }
            finish_json(obj)
        }
    }
}

pub fn narrow(k: u64, max_diameter: u64, outcome: &NarrowOutcome, format: Format) -> String {
    let NarrowOutcome::Found { tuple, certificate } = outcome else {
        unreachable!("misses are reported through the failure path");
    };
    let diameter = tuple.diameter();
    match format {
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!("{:<13} {}\n", "k", k));
            out.push_str(&format!("{:<13} {}\n", "max_diameter", max_diameter));
            out.push_str(&format!("{:<13} {}\n", "tuple", tuple));
            out.push_str(&format!("{:<13} {}\n", "diameter", diameter));
            out.push_str(&format!("{:<13} {}\n", "admissible", "yes"));
            cert_table(certificate, &mut out);
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for e in tuple.elements() {
                out.push_str(&format!("{e}\n"));
            }
            out
        }
        Format::Json => finish_json(json!({
            "op": "narrow",
            "k": k,
            "max_diameter": max_diameter,
            "found": true,
            "tuple": tuple.to_string(),
            "diameter": diameter.to_string(),
            "certificate": cert_json(certificate),
        })),
    }
}

pub fn progression(
    k: u64,
    n: u64,
    tuple: &Tuple,
    verdict: &Admissibility,
    format: Format,
) -> String {
    let d = polignac::primorial(k);
    match format {
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!("{:<11} {}\n", "k", k));
            out.push_str(&format!("{:<11} {}\n", "n", n));
            out.push_str(&format!("{:<11} {}\n", "d", d));
            out.push_str(&format!("{:<11} {}\n", "tuple", tuple));
            match verdict {
                Admissibility::Admissible(cert) => {
                    out.push_str(&format!("{:<11} {}\n", "admissible", "yes"));
                    cert_table(cert, &mut out);
                }
                Admissibility::Inadmissible(v) => {
                    out.push_str(&format!("{:<11} {}\n", "admissible", "no"));
                    out.push_str(&format!("violating prime {}\n", v.prime()));
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for e in tuple.elements() {
                out.push_str(&format!("{e}\n"));
            }
            out
        }
        Format::Json => {
            let mut obj = json!({
                "op": "lemma1",
                "k": k,
                "n": n,
                "d": d.to_string(),
                "tuple": tuple.to_string(),
                "admissible": verdict.is_admissible(),
            });
            if let Admissibility::Admissible(cert) = verdict {
                obj["certificate"] = cert_json(cert);
            }
            finish_json(obj)
        }
    }
}

pub fn window(k: u64, n: u64, values: &[num_bigint::BigUint], format: Format) -> String {
    let d = polignac::primorial(k);
    let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    match format {
        Format::Table => format!(
            "{:<7} {}\n{:<7} {}\n{:<7} {}\n{:<7} {}\n",
            "k",
            k,
            "n",
            n,
            "d",
            d,
            "values",
            rendered.join(",")
        ),
        Format::Csv => {
            let mut out = String::new();
            for v in &rendered {
                out.push_str(v);
                out.push('\n');
            }
            out
        }
        Format::Json => finish_json(json!({
            "op": "window",
            "k": k,
            "n": n,
            "d": d.to_string(),
            "values": rendered,
        })),
    }
}

fn blocks_json(seq: &BlockSequence) -> Value {
    Value::Array(
        seq.blocks()
            .iter()
            .map(|block| {
                Value::Array(
                    block
                        .iter()
                        .map(|v| Value::String(v.to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn blocks(seq: &BlockSequence, format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!("{:<3} {}\n", "q", seq.q()));
            out.push_str(&format!("{:<3} {}\n", "k", seq.k()));
            out.push_str(&format!("{:<3} {}\n", "d", seq.step_base()));
            for (j, block) in seq.blocks().iter().enumerate() {
                let rendered: Vec<String> = block.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("block {}: {}\n", j + 1, rendered.join(",")));
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for (j, block) in seq.blocks().iter().enumerate() {
                for (i, v) in block.iter().enumerate() {
                    out.push_str(&format!("{},{},{v}\n", j + 1, i + 1));
                }
            }
            out
        }
        Format::Json => finish_json(json!({
            "op": "blocks",
            "q": seq.q(),
            "k": seq.k(),
            "d": seq.step_base().to_string(),
            "blocks": blocks_json(seq),
        })),
    }
}

pub fn dirichlet_offset(spec: &DirichletSpec, count: u64, format: Format) -> String {
    let terms = spec.terms();
    match format {
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!("{:<3} {}\n", "a", spec.a()));
            out.push_str(&format!("{:<3} {}\n", "q", spec.q()));
            out.push_str(&format!("{:<3} {}\n", "k", spec.k()));
            out.push_str(&format!("{:<3} {}\n", "d", spec.step_base()));
            for (idx, (n, term)) in spec.n_values().iter().zip(&terms).enumerate() {
                out.push_str(&format!("i={}: N={n}, a+N*q={term}\n", idx + 1));
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for (idx, (n, term)) in spec.n_values().iter().zip(&terms).enumerate() {
                out.push_str(&format!("{},{n},{term}\n", idx + 1));
            }
            out
        }
        Format::Json => finish_json(json!({
            "op": "dirichlet",
            "a": spec.a(),
            "q": spec.q(),
            "k": spec.k(),
            "count": count,
            "d": spec.step_base().to_string(),
            "n_values": spec.n_values().iter().map(|n| n.to_string()).collect::<Vec<_>>(),
            "terms": terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        })),
    }
}

pub fn dirichlet_zero(seq: &BlockSequence, format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!("{:<3} {}\n", "a", 0));
            out.push_str("a = 0: plain multiples of q; block decomposition follows\n");
            out.push_str(&blocks(seq, Format::Table));
            out
        }
        Format::Csv => blocks(seq, Format::Csv),
        Format::Json => finish_json(json!({
            "op": "dirichlet",
            "a": 0,
            "q": seq.q(),
            "k": seq.k(),
            "d": seq.step_base().to_string(),
            "blocks": blocks_json(seq),
        })),
    }
}

pub fn ap_run(set_len: usize, run: &APRun, format: Format) -> String {
    match format {
        Format::Table => {
            let terms: Vec<String> = run.terms().map(|t| t.to_string()).collect();
            format!(
                "{:<7} {}\n{:<7} {}\n{:<7} {}\n{:<7} {}\n{:<7} {}\n",
                "size",
                set_len,
                "start",
                run.start,
                "step",
                run.step,
                "length",
                run.length,
                "terms",
                terms.join(",")
            )
        }
        Format::Csv => format!("{},{},{}\n", run.start, run.step, run.length),
        Format::Json => finish_json(json!({
            "op": "ap",
            "size": set_len,
            "start": run.start,
            "step": run.step,
            "length": run.length,
        })),
    }
}
