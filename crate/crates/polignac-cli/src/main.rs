//! `polignac` — command-line front end for the prime-gap census,
//! admissible-tuple, and arithmetic-progression machinery.
//!
//! Exit status: 0 on success, 1 when a search reports a miss (narrow-tuple
//! failure, empty candidate set), 2 on usage or precondition errors.

mod render;

use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;

use polignac::admissible::{
    is_admissible, narrow_tuple, polignac_window, primorial_progression, NarrowOutcome, Tuple,
};
use polignac::census::{
    density_lower_bound, empirical_density, interval_cover, CandidateSet, CoverOutcome, GapCensus,
};
use polignac::progressions::{
    ap_blocks, dirichlet_subsequence, longest_ap_in_set, parse_integer_set, DirichletResult,
};
use polignac::sieve::{primes_in_range_capped, DEFAULT_SEGMENT_SIZE, DEFAULT_SIEVE_CEILING};

use render::Format;

const CEILING_ENV: &str = "POLIGNAC_SIEVE_CEILING";

#[derive(Parser)]
#[command(
    name = "polignac",
    version,
    about = "Prime-gap census, admissible k-tuples, and arithmetic-progression constructions"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,

    /// Worker threads for parallel sieving (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Write output to a file instead of stdout
    /// (for `census`: the canonical census file, whatever --format says)
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// Census input: compute it fresh or load a canonical census file.
#[derive(Args)]
#[group(multiple = false)]
struct CensusSource {
    /// Compute the census up to this bound
    #[arg(long)]
    x: Option<u64>,

    /// Read a census file (canonical format)
    #[arg(long, value_name = "FILE")]
    census: Option<PathBuf>,
}

impl CensusSource {
    fn load(&self, ceiling: u64) -> Result<GapCensus, CliError> {
        match (self.x, &self.census) {
            (Some(x), None) => {
                Ok(GapCensus::compute_with(x, DEFAULT_SEGMENT_SIZE, ceiling)?)
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path).map_err(|e| {
                    CliError::Usage(format!("cannot read {}: {e}", path.display()))
                })?;
                Ok(GapCensus::parse(&text)?)
            }
            _ => Err(CliError::Usage(
                "provide a census via --x <BOUND> or --census <FILE>".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the primes in [lo, hi)
    Sieve {
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
        #[arg(long, default_value_t = DEFAULT_SEGMENT_SIZE)]
        segment_size: u64,
    },

    /// Count gaps between consecutive primes up to x
    Census {
        #[arg(long)]
        x: u64,
        #[arg(long, default_value_t = DEFAULT_SEGMENT_SIZE)]
        segment_size: u64,
    },

    /// Gap values occurring at least --min-count times
    Candidates {
        #[command(flatten)]
        source: CensusSource,
        #[arg(long)]
        min_count: u64,
    },

    /// Smallest width C such that every interval [m, m+C] in [0, m_max]
    /// contains a candidate gap value
    Cover {
        #[command(flatten)]
        source: CensusSource,
        #[arg(long, default_value_t = 1)]
        min_count: u64,
        #[arg(long)]
        m_max: u64,
        /// Keep the odd gap 1 among the candidates
        #[arg(long)]
        keep_gap_1: bool,
    },

    /// Density figures: the analytic floor 1/(2C), or the finite density
    /// |S ∩ [0, n]| / n of census candidates
    Density {
        /// Evaluate 1/(2C) for the cover constant --c
        #[arg(long, group = "mode")]
        analytic: bool,
        /// Evaluate |S ∩ [0, n]| / n for census candidates
        #[arg(long, group = "mode")]
        empirical: bool,
        /// Cover constant C (integer or numer/denom), for --analytic
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[command(flatten)]
        source: CensusSource,
        /// Density denominator n, for --empirical
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = 1)]
        min_count: u64,
        /// Keep the odd gap 1 among the candidates
        #[arg(long)]
        keep_gap_1: bool,
    },

    /// Test a tuple for admissibility (text form: "0,2,6")
    Admissible {
        #[arg(long)]
        tuple: String,
    },

    /// Search for an admissible k-tuple of diameter <= --max-diameter
    Narrow {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        max_diameter: u64,
    },

    /// Build the tuple {0, dN, 2dN, ..., (k-1)dN}, d = primorial(k)
    Lemma1 {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },

    /// The window {dN, ..., (k-1)dN} of candidate gap values
    Window {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },

    /// Blocks of the progression q, 2q, ...: block j is
    /// (i * k^(j-1) * q * d) for i = 1..k-1
    Blocks {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        block_count: u64,
    },

    /// Subsequence indices N_i = (a/q)(i*d - 1) with a + N_i q = a*i*d
    Dirichlet {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 3)]
        count: u64,
    },

    /// Longest arithmetic progression inside an integer set
    Ap {
        /// Integer-set file: one ascending decimal per line
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        #[command(flatten)]
        source: CensusSource,
        #[arg(long, default_value_t = 1)]
        min_count: u64,
        /// Keep the odd gap 1 among the candidates
        #[arg(long)]
        keep_gap_1: bool,
    },
}

enum CliError {
    /// Bad arguments, unmet preconditions, unreadable input: exit 2.
    Usage(String),
    /// The operation ran and reported a miss: exit 1.
    Failure(String),
}

impl From<polignac::Error> for CliError {
    fn from(e: polignac::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<polignac::ParseError> for CliError {
    fn from(e: polignac::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn sieve_ceiling() -> Result<u64, CliError> {
    match std::env::var(CEILING_ENV) {
        Ok(text) => text.parse::<u64>().map_err(|_| {
            CliError::Usage(format!(
                "{CEILING_ENV} must be a decimal integer, got {text:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SIEVE_CEILING),
        Err(std::env::VarError::NotUnicode(_)) => Err(CliError::Usage(format!(
            "{CEILING_ENV} is not valid unicode"
        ))),
    }
}

fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let (numer_text, denom_text) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let bad = |part: &str| CliError::Usage(format!("'{part}' is not an integer (in '{text}')"));
    let numer = BigInt::from_str(numer_text).map_err(|_| bad(numer_text))?;
    let denom = BigInt::from_str(denom_text).map_err(|_| bad(denom_text))?;
    if denom == BigInt::from(0) {
        return Err(CliError::Usage(format!("'{text}' has a zero denominator")));
    }
    Ok(BigRational::new(numer, denom))
}

/// Write the rendered output to --out if given, stdout otherwise.
fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn candidate_gaps(
    source: &CensusSource,
    min_count: u64,
    keep_gap_1: bool,
    ceiling: u64,
) -> Result<CandidateSet, CliError> {
    let census = source.load(ceiling)?;
    let set = CandidateSet::from_census(&census, min_count)?;
    Ok(if keep_gap_1 { set } else { set.without_gap_one() })
}

fn run_sieve(
    lo: u64,
    hi: u64,
    segment_size: u64,
    ceiling: u64,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), CliError> {
    let segments = primes_in_range_capped(lo, hi, segment_size, ceiling)?;
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(fs::File::create(path).map_err(|e| {
            CliError::Usage(format!("cannot write {}: {e}", path.display()))
        })?),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    let io_err = |e: std::io::Error| CliError::Usage(format!("write failed: {e}"));
    match format {
        Format::Table | Format::Csv => {
            // one prime per line; streams, so huge ranges never materialize
            for segment in segments {
                for p in segment.primes {
                    writeln!(sink, "{p}").map_err(io_err)?;
                }
            }
        }
        Format::Json => {
            let primes: Vec<u64> = segments.flat_map(|s| s.primes).collect();
            let value = serde_json::json!({
                "op": "sieve",
                "lo": lo,
                "hi": hi,
                "count": primes.len(),
                "primes": primes,
            });
            writeln!(sink, "{value}").map_err(io_err)?;
        }
    }
    sink.flush().map_err(io_err)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let ceiling = sieve_ceiling()?;
    let format = cli.format;

    match cli.command {
        Command::Sieve {
            lo,
            hi,
            segment_size,
        } => run_sieve(lo, hi, segment_size, ceiling, format, &cli.out),

        Command::Census { x, segment_size } => {
            let census = GapCensus::compute_with(x, segment_size, ceiling)?;
            match &cli.out {
                // --out persists the canonical file format; rendered output
                // still goes to stdout so the two roles never mix
                Some(path) => fs::write(path, census.render()).map_err(|e| {
                    CliError::Usage(format!("cannot write {}: {e}", path.display()))
                }),
                None => emit(&None, &render::census(&census, format)),
            }
        }

        Command::Candidates { source, min_count } => {
            let census = source.load(ceiling)?;
            let set = CandidateSet::from_census(&census, min_count)?;
            emit(&cli.out, &render::candidates(&set, format))
        }

        Command::Cover {
            source,
            min_count,
            m_max,
            keep_gap_1,
        } => {
            let set = candidate_gaps(&source, min_count, keep_gap_1, ceiling)?;
            match interval_cover(set.gaps(), m_max)? {
                CoverOutcome::Report(report) => emit(&cli.out, &render::cover(&report, format)),
                CoverOutcome::NoCandidates { m_max } => Err(CliError::Failure(format!(
                    "cover: no candidate gap values lie in [0, {m_max}]"
                ))),
            }
        }

        Command::Density {
            analytic,
            empirical,
            c,
            source,
            n,
            min_count,
            keep_gap_1,
        } => match (analytic, empirical) {
            (true, false) => {
                let c_text = c.ok_or_else(|| {
                    CliError::Usage("--analytic needs --c <RATIONAL>".into())
                })?;
                let c = parse_rational(&c_text)?;
                let bound = density_lower_bound(&c)?;
                emit(&cli.out, &render::density_analytic(&c, &bound, format))
            }
            (false, true) => {
                let n = n.ok_or_else(|| CliError::Usage("--empirical needs --n <N>".into()))?;
                let set = candidate_gaps(&source, min_count, keep_gap_1, ceiling)?;
                let density = empirical_density(set.gaps(), n)?;
                let count = set.gaps().iter().filter(|&&g| g <= n).count() as u64;
                emit(
                    &cli.out,
                    &render::density_empirical(&set, n, count, &density, format),
                )
            }
            _ => Err(CliError::Usage(
                "pick exactly one of --analytic or --empirical".into(),
            )),
        },

        Command::Admissible { tuple } => {
            let tuple = Tuple::parse(&tuple)?;
            let verdict = is_admissible(&tuple);
            emit(&cli.out, &render::admissible(&tuple, &verdict, format))
        }

        Command::Narrow { k, max_diameter } => match narrow_tuple(k, max_diameter)? {
            outcome @ NarrowOutcome::Found { .. } => {
                emit(&cli.out, &render::narrow(k, max_diameter, &outcome, format))
            }
            NarrowOutcome::Failed { reason } => {
                Err(CliError::Failure(format!("narrow: {reason}")))
            }
        },

        Command::Lemma1 { k, n } => {
            let tuple = primorial_progression(k, n)?;
            let verdict = is_admissible(&tuple);
            emit(
                &cli.out,
                &render::progression(k, n, &tuple, &verdict, format),
            )
        }

        Command::Window { k, n } => {
            let values = polignac_window(k, n)?;
            emit(&cli.out, &render::window(k, n, &values, format))
        }

        Command::Blocks {
            q,
            k,
            block_count,
        } => {
            let seq = ap_blocks(q, k, block_count)?;
            emit(&cli.out, &render::blocks(&seq, format))
        }

        Command::Dirichlet { a, q, k, count } => {
            match dirichlet_subsequence(a, q, k, count)? {
                DirichletResult::Offset(spec) => {
                    emit(&cli.out, &render::dirichlet_offset(&spec, count, format))
                }
                DirichletResult::ZeroOffset(seq) => {
                    emit(&cli.out, &render::dirichlet_zero(&seq, format))
                }
            }
        }

        Command::Ap {
            input,
            source,
            min_count,
            keep_gap_1,
        } => {
            let set: Vec<u64> = match (&input, source.x.is_some() || source.census.is_some()) {
                (Some(path), false) => {
                    let text = fs::read_to_string(path).map_err(|e| {
                        CliError::Usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    parse_integer_set(&text)?
                }
                (None, true) => candidate_gaps(&source, min_count, keep_gap_1, ceiling)?
                    .gaps()
                    .to_vec(),
                _ => {
                    return Err(CliError::Usage(
                        "provide the set via --input <FILE>, or --x/--census".into(),
                    ))
                }
            };
            if set.is_empty() {
                return Err(CliError::Failure(
                    "ap: the set is empty; no progression to find".into(),
                ));
            }
            let run = longest_ap_in_set(&set)?;
            emit(&cli.out, &render::ap_run(set.len(), &run, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if workers == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
        {
            eprintln!("error: cannot configure {workers} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failure(message)) => {
            eprintln!("{message}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
