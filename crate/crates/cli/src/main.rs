//! `oddpi` command-line tool.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use oddpi::oracle::sieve_primes;
use oddpi::{breakdown, lambda_c_stats, prime_pi, sieve_restricted};

const EXIT_USAGE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "oddpi",
    version,
    about = "Exact prime counting via odd-composite progressions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Also write the output to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print pi(N).
    Pi {
        #[arg(allow_negative_numbers = true)]
        n: u64,
    },
    /// Print every intermediate of the pi(N) evaluation.
    Trace {
        #[arg(allow_negative_numbers = true)]
        n: u64,
    },
    /// Print pi for each N given.
    Table {
        #[arg(required = true, allow_negative_numbers = true)]
        ns: Vec<u64>,
    },
    /// Compare pi against a sieve for every value in [2, N].
    Verify {
        #[arg(allow_negative_numbers = true)]
        n: u64,
    },
    /// Time pi(N) for N = step, step^2, ... up to max.
    Bench {
        #[arg(long, allow_negative_numbers = true)]
        max: u64,
        #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
        step: u64,
    },
}

/// Failure that maps onto a non-zero exit status.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch { output: String },
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure::Io(err)
    }
}

#[derive(Serialize)]
struct PiRow {
    n: u64,
    pi: u64,
}

#[derive(Serialize)]
struct BenchRow {
    n: u64,
    pi: u64,
    micros: u128,
    subset_terms: u64,
    nonzero_terms: u64,
}

#[derive(Serialize)]
struct VerifyReport {
    status: &'static str,
    checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_mismatch: Option<Mismatch>,
}

#[derive(Serialize, Clone, Copy)]
struct Mismatch {
    n: u64,
    engine: u64,
    oracle: u64,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn render_pi(n: u64, format: Format) -> String {
    let pi = prime_pi(n);
    match format {
        Format::Text => format!("{pi}\n"),
        Format::Json => to_json(&PiRow { n, pi }),
        Format::Csv => format!("{n},{pi}\n"),
    }
}

fn render_trace(n: u64, format: Format) -> Result<String, Failure> {
    let b = breakdown(n).map_err(|e| Failure::Usage(e.to_string()))?;
    let indices: Vec<String> = b.restricted_indices.iter().map(u64::to_string).collect();
    Ok(match format {
        Format::Json => to_json(&b),
        Format::Csv => format!(
            "n,pi,even_composites,odd_composite_raw_sum,lambda_c,odd_composites,restricted_indices\n\
             {},{},{},{},{},{},{}\n",
            b.n,
            b.pi,
            b.even_composites,
            b.raw_odd_sum,
            b.lambda_c,
            b.odd_composites,
            indices.join(";")
        ),
        Format::Text => format!(
            "N                      {}\n\
             restricted indices     [{}]\n\
             even composites        {}\n\
             odd composite raw sum  {}\n\
             lambda_c               {}\n\
             odd composites         {}\n\
             pi(N)                  {}\n\
             pi({}) = {} - {} - {} + {} - 1 = {}\n",
            b.n,
            indices.join(", "),
            b.even_composites,
            b.raw_odd_sum,
            b.lambda_c,
            b.odd_composites,
            b.pi,
            b.n,
            b.n,
            b.even_composites,
            b.raw_odd_sum,
            b.lambda_c,
            b.pi
        ),
    })
}

fn render_table(ns: &[u64], format: Format) -> String {
    let rows: Vec<PiRow> = ns
        .par_iter()
        .map(|&n| PiRow { n, pi: prime_pi(n) })
        .collect();
    match format {
        Format::Json => to_json(&rows),
        Format::Csv => rows.iter().map(|r| format!("{},{}\n", r.n, r.pi)).collect(),
        Format::Text => {
            let width = rows
                .iter()
                .map(|r| r.n.to_string().len())
                .max()
                .unwrap_or(1)
                .max(1);
            let mut out = format!("{:>width$}  pi(N)\n", "N");
            for r in &rows {
                out.push_str(&format!("{:>width$}  {}\n", r.n, r.pi));
            }
            out
        }
    }
}

fn render_verify(n: u64, format: Format) -> Result<String, Failure> {
    let oracle = sieve_primes(n).map_err(|e| Failure::Usage(e.to_string()))?;
    let checked = n.saturating_sub(1);
    let first_mismatch = (2..=n)
        .into_par_iter()
        .filter_map(|m| {
            let engine = prime_pi(m);
            let expected = oracle.pi(m);
            (engine != expected).then_some(Mismatch {
                n: m,
                engine,
                oracle: expected,
            })
        })
        .min_by_key(|m| m.n);
    let report = VerifyReport {
        status: if first_mismatch.is_some() {
            "mismatch"
        } else {
            "ok"
        },
        checked,
        first_mismatch,
    };
    let output = match (format, first_mismatch) {
        (Format::Json, _) => to_json(&report),
        (Format::Csv, None) => format!("status,checked\nok,{checked}\n"),
        (Format::Csv, Some(m)) => format!(
            "status,n,engine,oracle\nmismatch,{},{},{}\n",
            m.n, m.engine, m.oracle
        ),
        (Format::Text, None) => format!("OK {checked}\n"),
        (Format::Text, Some(m)) => format!(
            "MISMATCH at N={}: engine={} oracle={}\n",
            m.n, m.engine, m.oracle
        ),
    };
    match first_mismatch {
        None => Ok(output),
        Some(_) => Err(Failure::Mismatch { output }),
    }
}

fn bench_points(max: u64, step: u64) -> Result<Vec<u64>, Failure> {
    if step < 2 {
        return Err(Failure::Usage(format!(
            "--step must be at least 2, got {step}"
        )));
    }
    if max < step {
        return Err(Failure::Usage(format!(
            "--max ({max}) must be at least --step ({step})"
        )));
    }
    let mut points = Vec::new();
    let mut n = step;
    loop {
        points.push(n);
        match n.checked_mul(step) {
            Some(next) if next <= max => n = next,
            _ => break,
        }
    }
    Ok(points)
}

fn render_bench(max: u64, step: u64, format: Format) -> Result<String, Failure> {
    let rows: Vec<BenchRow> = bench_points(max, step)?
        .into_iter()
        .map(|n| {
            let started = Instant::now();
            let pi = prime_pi(n);
            let micros = started.elapsed().as_micros();
            let stats = lambda_c_stats(n, &sieve_restricted(n));
            BenchRow {
                n,
                pi,
                micros,
                subset_terms: stats.subset_terms,
                nonzero_terms: stats.nonzero_terms,
            }
        })
        .collect();
    Ok(match format {
        Format::Json => to_json(&rows),
        Format::Text | Format::Csv => {
            let mut out = String::from("n,pi,micros,subset_terms,nonzero_terms\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.n, r.pi, r.micros, r.subset_terms, r.nonzero_terms
                ));
            }
            out
        }
    })
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let format = cli.output.format;
    match &cli.command {
        Command::Pi { n } => Ok(render_pi(*n, format)),
        Command::Trace { n } => render_trace(*n, format),
        Command::Table { ns } => Ok(render_table(ns, format)),
        Command::Verify { n } => render_verify(*n, format),
        Command::Bench { max, step } => render_bench(*max, *step, format),
    }
}

fn emit(output: &str, out: Option<&PathBuf>) -> io::Result<()> {
    if let Some(path) = out {
        fs::write(path, output)?;
    }
    let mut stdout = io::stdout().lock();
    stdout.write_all(output.as_bytes())?;
    stdout.flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.output.out.as_ref();
    let result = execute(&cli).and_then(|output| emit(&output, out).map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Mismatch { output }) => {
            if let Err(err) = emit(&output, out) {
                eprintln!("error: {err}");
            }
            eprintln!("verification failed");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Io(err)) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
