use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use modpart::character::truncated_tensor_char;
use modpart::{enumerate_special, is_m_good, is_m_special, l_core, mullineux, mullineux_symbol, Partition};
use modpart_cli::cache::{degree_cap, encode, CACHE_ENV};
use modpart_cli::formats::{
    parts, schur_terms, symbol_pairs, to_json, CoreReport, GoodReport, InfoReport, MullReport,
    SpecialVerdictJson,
};
use modpart_cli::suites::{check_caps, default_params, unknown_suite};
use modpart_cli::{run_suite, CliError, MatrixStore, Result};
use serde::Serialize;

/// Exact partition combinatorics: Mullineux map, m-special classification,
/// truncated tensor characters and LLT decomposition numbers.
#[derive(Parser)]
#[command(name = "modpart", version)]
struct Cli {
    /// Lift the default degree caps.
    #[arg(long, global = true)]
    unsafe_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Partition as "a1,a2,...", weakly decreasing; "" for the empty partition.
    #[arg(value_parser = parse_partition, allow_hyphen_values = false)]
    parts: Partition,
    #[arg(long)]
    l: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Nodes, edge data, core and regularity of a partition.
    Info(Input),
    /// Mullineux symbol and image of an l-regular partition.
    Mull(Input),
    /// The l-core and l-weight.
    Core(Input),
    /// Whether a partition is m-special.
    Special {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: usize,
        /// Include a distinguished decomposition.
        #[arg(long)]
        witness: bool,
    },
    /// The tri-state m-good classifier.
    Good {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: usize,
        /// Cross-check restricted inputs against the LLT decomposition matrix.
        #[arg(long)]
        oracle: bool,
        #[arg(long, env = CACHE_ENV)]
        cache: Option<PathBuf>,
    },
    /// All m-special partitions of a degree, lexicographically descending.
    EnumerateSpecial {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        degree: usize,
        /// Only l-restricted partitions.
        #[arg(long)]
        restricted: bool,
    },
    /// Schur expansion of the degree-r part of m truncated symmetric powers in n variables.
    Char {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Decomposition matrix from the LLT canonical basis, in cache-file format.
    DecompMatrix {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, env = CACHE_ENV)]
        cache: Option<PathBuf>,
        /// Recompute and overwrite the cached file.
        #[arg(long)]
        force: bool,
    },
    /// Run an exhaustive cross-check suite.
    Crosscheck(Crosscheck),
}

#[derive(Args)]
struct Crosscheck {
    #[arg(long)]
    suite: String,
    /// Moduli, comma separated.
    #[arg(long, value_delimiter = ',')]
    l: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    m: Option<Vec<usize>>,
    /// Variable counts for the character suite.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    #[arg(long)]
    max_degree: Option<usize>,
    /// Degree bound for checks that need the decomposition matrix.
    #[arg(long)]
    oracle_max_degree: Option<usize>,
    /// Random removal orders per input (l-core suite).
    #[arg(long)]
    orders: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Write the report as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Record wall time in the report.
    #[arg(long)]
    timing: bool,
    #[arg(long, env = CACHE_ENV)]
    cache: Option<PathBuf>,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| format!("{e}; expected weakly decreasing \"a1,a2,...\""))
}

fn print<T: Serialize>(value: &T) -> Result<()> {
    print!("{}", to_json(value)?);
    Ok(())
}

fn check_l(l: usize) -> Result<()> {
    if l < 2 {
        return Err(CliError::Usage(format!("l={l} must be at least 2")));
    }
    Ok(())
}

fn oracle_cap(l: usize, r: usize, unsafe_large: bool) -> Result<()> {
    if r > degree_cap(l) && !unsafe_large {
        return Err(CliError::Usage(format!(
            "degree {r} exceeds the cap {} at l={l}; pass --unsafe-large to override",
            degree_cap(l)
        )));
    }
    Ok(())
}

/// Exit status for a successful command: 0, or 1 when a property failed.
fn run(cli: Cli) -> Result<u8> {
    let big = cli.unsafe_large;
    match cli.command {
        Command::Info(Input { parts: p, l }) => {
            check_l(l)?;
            print(&InfoReport::new(&p, l)?)?;
        }
        Command::Mull(Input { parts: p, l }) => {
            check_l(l)?;
            let symbol = mullineux_symbol(&p, l)?;
            let image = mullineux(&p, l)?;
            print(&MullReport {
                partition: parts(&p),
                l,
                symbol: symbol_pairs(&symbol),
                length: image.len(),
                image: parts(&image),
            })?;
        }
        Command::Core(Input { parts: p, l }) => {
            check_l(l)?;
            let core = l_core(&p, l);
            let weight = (p.degree() - core.degree()) / l;
            print(&CoreReport { partition: parts(&p), l, core: parts(&core), weight })?;
        }
        Command::Special { input, m, witness } => {
            check_l(input.l)?;
            let v = is_m_special(&input.parts, m, input.l);
            print(&SpecialVerdictJson::new(&v, witness))?;
        }
        Command::Good { input, m, oracle, cache } => {
            let (p, l) = (input.parts, input.l);
            check_l(l)?;
            let matrix = if oracle && p.is_restricted(l) {
                oracle_cap(l, p.degree(), big)?;
                Some(MatrixStore::new(cache).get(l, p.degree(), false)?)
            } else {
                None
            };
            let v = is_m_good(&p, m, l, matrix.as_deref())?;
            print(&GoodReport {
                partition: parts(&p),
                l,
                m,
                status: v.status.as_str().to_string(),
                provenance: v.provenance.to_string(),
            })?;
        }
        Command::EnumerateSpecial { l, m, degree, restricted } => {
            check_l(l)?;
            if degree > 30 && !big {
                return Err(CliError::Usage("degree above 30 needs --unsafe-large".into()));
            }
            let list: Vec<Vec<usize>> =
                enumerate_special(m, l, degree, restricted).iter().map(parts).collect();
            print(&list)?;
        }
        Command::Char { m, n, l, degree } => {
            check_l(l)?;
            if (degree > 16 || n > 8) && !big {
                return Err(CliError::Usage("degree above 16 or n above 8 needs --unsafe-large".into()));
            }
            print(&schur_terms(&truncated_tensor_char(m, n, l, degree)))?;
        }
        Command::DecompMatrix { l, degree, cache, force } => {
            check_l(l)?;
            oracle_cap(l, degree, big)?;
            let matrix = MatrixStore::new(cache).get(l, degree, force)?;
            print!("{}", encode(&matrix));
        }
        Command::Crosscheck(args) => return crosscheck(args, big),
    }
    Ok(0)
}

fn crosscheck(args: Crosscheck, big: bool) -> Result<u8> {
    let mut params = default_params(&args.suite).ok_or_else(|| unknown_suite(&args.suite))?;
    if let Some(l) = args.l {
        params.l = l;
    }
    if let Some(m) = args.m {
        params.m = m;
    }
    if let Some(n) = args.n {
        params.n = n;
    }
    if let Some(d) = args.max_degree {
        params.max_degree = d;
    }
    if args.oracle_max_degree.is_some() {
        params.oracle_max_degree = args.oracle_max_degree;
    }
    if args.orders.is_some() {
        params.orders = args.orders;
    }
    if args.seed.is_some() {
        params.seed = args.seed;
    }
    check_caps(&args.suite, &params, big)?;
    let store = MatrixStore::new(args.cache);
    let start = Instant::now();
    let mut report = run_suite(&args.suite, &params, &store)?;
    if args.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    if let Some(path) = &args.json {
        std::fs::write(path, to_json(&report)?)?;
    }
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!("{} {status} checked={} failures={}", report.suite, report.checked, report.failures.len());
    if let Some(f) = report.failures.first() {
        println!("first failure: {}\n  expected: {}\n  actual:   {}", f.input, f.expected, f.actual);
    }
    Ok(u8::from(!report.passed()))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
