//! The `tiemax` CLI: single traced runs, Monte Carlo benches, and the oracle
//! certification suite. All randomness flows from `--seed`; identical
//! arguments produce byte-identical output.

use std::io::Write;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Serialize;

use tiemax::emit::{to_json_line, to_json_pretty, write_records_csv, BenchReport};
use tiemax::harness::{run_baseline, run_trial, run_trials, summarize, TrialConfig};
use tiemax::rat::{parse_rat, rat_string, Rat};
use tiemax::{GeneratorKind, Index, RunOutcome, SearchStrategy};

#[derive(Parser)]
#[command(name = "tiemax", version, about = "Randomized maximum finding that tolerates ties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one seeded trial and print its trace as JSON.
    Run {
        #[arg(long)]
        n: usize,
        /// Failure exponent, an exact rational: "1", "1/2", or "0.5".
        #[arg(long, value_parser = parse_rat, default_value = "1")]
        c: Rat,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "balanced-multiset")]
        generator: GeneratorKind,
        #[arg(long, default_value = "binary")]
        strategy: SearchStrategy,
    },
    /// Run a batch of seeded trials; records go to stdout, and for the CSV
    /// format the summary goes to stderr as one JSON line.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rat, default_value = "1")]
        c: Rat,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "balanced-multiset")]
        generator: GeneratorKind,
        #[arg(long, default_value = "binary")]
        strategy: SearchStrategy,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        /// Also run the n-1 deterministic elimination baseline on every
        /// trial instance.
        #[arg(long)]
        baseline: bool,
    },
    /// Replay the runtime's semantic answers against the literal oracle;
    /// exits nonzero on any mismatch.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 2000)]
        cases: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?} (csv|json)")),
        }
    }
}

/// The `run` subcommand's JSON document.
#[derive(Serialize)]
struct RunReport {
    generator: GeneratorKind,
    n: usize,
    #[serde(with = "rat_string")]
    c: Rat,
    strategy: SearchStrategy,
    seed: u64,
    declared: Option<Index>,
    outcome: RunOutcome,
    correct: bool,
    rounds: u64,
    pivots: Vec<Index>,
    r_sequence: Vec<usize>,
    final_pivot_is_max: bool,
    simulated_parity_tests: u64,
    ordinary_tests: u64,
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { n, c, seed, generator, strategy } => {
            let cfg = TrialConfig { generator, n, c, strategy, seed };
            let params = cfg.params();
            let output = run_trial(&cfg, &params, 0);
            let report = RunReport {
                generator,
                n,
                c,
                strategy,
                seed,
                declared: output.declared,
                outcome: output.trace.outcome,
                correct: output.record.correct,
                rounds: output.trace.rounds,
                pivots: output.trace.pivots,
                r_sequence: output.trace.r_sequence,
                final_pivot_is_max: output.trace.final_pivot_is_max,
                simulated_parity_tests: output.record.simulated_parity_tests,
                ordinary_tests: output.record.ordinary_tests,
            };
            println!("{}", to_json_pretty(&report));
        }
        Command::Bench { n, c, trials, seed, generator, strategy, format, baseline } => {
            let cfg = TrialConfig { generator, n, c, strategy, seed };
            let records = run_trials(&cfg, trials);
            let summary = summarize(&records);
            let baseline_summary = baseline.then(|| run_baseline(&cfg, trials));
            match format {
                OutputFormat::Csv => {
                    let stdout = std::io::stdout();
                    write_records_csv(stdout.lock(), &records)
                        .context("writing CSV records")?;
                    eprintln!("{}", to_json_line(&summary));
                    if let Some(b) = &baseline_summary {
                        eprintln!("{}", to_json_line(b));
                    }
                }
                OutputFormat::Json => {
                    let report = BenchReport {
                        records: &records,
                        summary: &summary,
                        baseline: baseline_summary.as_ref(),
                    };
                    println!("{}", to_json_pretty(&report));
                }
            }
        }
        Command::Verify { max_n, cases, seed } => {
            let report = tiemax::verify_oracle_suite(max_n, -5..=5, cases, seed);
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            report.write_text(&mut lock).context("writing verify report")?;
            lock.flush()?;
            if !report.passed() {
                std::process::exit(1);
            }
        }
    }
    Ok(())
}
