//! Monte Carlo trial runner and aggregation.
//!
//! Trial k draws all of its randomness from stream k of the base seed, so
//! trials are independent, reproducible, and safe to run in parallel while
//! records stay in trial order.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::findmax::{elimination_baseline, find_max, Params, RunOutcome, RunTrace};
use crate::generate::{generate_instance, GeneratorKind, GeneratorSpec};
use crate::instance::{Index, Instance};
use crate::ledger::TestLedger;
use crate::parity::SearchStrategy;
use crate::rat::{rat_string, Rat};

/// One benchmark configuration; `seed` is the base seed all trials derive
/// their streams from.
#[derive(Debug, Clone, Copy)]
pub struct TrialConfig {
    pub generator: GeneratorKind,
    pub n: usize,
    pub c: Rat,
    pub strategy: SearchStrategy,
    pub seed: u64,
}

impl TrialConfig {
    pub fn params(&self) -> Params {
        Params::derive(self.n, self.c, self.strategy, self.seed)
            .expect("trial config carries a valid (n, c)")
    }
}

/// One row of benchmark output. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub generator: GeneratorKind,
    pub n: usize,
    #[serde(with = "rat_string")]
    pub c: Rat,
    pub strategy: SearchStrategy,
    pub seed: u64,
    pub outcome: RunOutcome,
    pub rounds: u64,
    pub simulated_parity_tests: u64,
    pub ordinary_tests: u64,
    pub correct: bool,
}

/// Everything one trial produced.
#[derive(Debug, Clone)]
pub struct TrialOutput {
    pub record: TrialRecord,
    pub trace: RunTrace,
    pub declared: Option<Index>,
}

fn trial_rng(base_seed: u64, trial: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(base_seed);
    rng.set_stream(trial);
    rng
}

/// The instance trial k runs on; the baseline runner regenerates it the same
/// way.
pub fn trial_instance(cfg: &TrialConfig, trial: u64) -> (Instance, ChaCha12Rng) {
    let mut rng = trial_rng(cfg.seed, trial);
    let gen_seed: u64 = rng.random();
    let inst = generate_instance(&GeneratorSpec { kind: cfg.generator, n: cfg.n, seed: gen_seed });
    (inst, rng)
}

/// Run a single trial.
pub fn run_trial(cfg: &TrialConfig, params: &Params, trial: u64) -> TrialOutput {
    let (inst, mut rng) = trial_instance(cfg, trial);
    let (declared, trace) = find_max(&inst, params, &mut rng);
    let record = TrialRecord {
        trial,
        generator: cfg.generator,
        n: cfg.n,
        c: cfg.c,
        strategy: cfg.strategy,
        seed: cfg.seed,
        outcome: trace.outcome,
        rounds: trace.rounds,
        simulated_parity_tests: trace.ledger.simulated_parity_tests(),
        ordinary_tests: trace.ledger.ordinary_tests(),
        correct: trace.outcome == RunOutcome::DeclaredCorrect,
    };
    TrialOutput { record, trace, declared }
}

/// Run `trials` seeded trials; records come back in trial order.
pub fn run_trials(cfg: &TrialConfig, trials: u64) -> Vec<TrialRecord> {
    assert!(trials >= 1, "need at least one trial");
    let params = cfg.params();
    (0..trials)
        .into_par_iter()
        .map(|k| run_trial(cfg, &params, k).record)
        .collect()
}

/// Like [`run_trials`], keeping the full traces for analysis.
pub fn run_trials_traced(cfg: &TrialConfig, trials: u64) -> Vec<TrialOutput> {
    assert!(trials >= 1, "need at least one trial");
    let params = cfg.params();
    (0..trials).into_par_iter().map(|k| run_trial(cfg, &params, k)).collect()
}

/// Per-strategy cost aggregation inside a summary.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrategyCost {
    pub trials: u64,
    pub mean_ordinary_tests: f64,
    pub max_ordinary_tests: u64,
}

/// Aggregated Monte Carlo statistics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialSummary {
    pub trials: u64,
    pub failure_rate: f64,
    pub max_ordinary_tests: u64,
    pub mean_ordinary_tests: f64,
    /// max_ordinary_tests / (log2 n)^3: tracks the constant in front of the
    /// depth bound.
    pub depth_bound_ratio: f64,
    pub strategy_costs: BTreeMap<SearchStrategy, StrategyCost>,
}

/// Exact aggregation over a non-empty record batch. A failure is any outcome
/// other than a correct declaration: wrong declarations and exhaustion both
/// count.
pub fn summarize(records: &[TrialRecord]) -> TrialSummary {
    assert!(!records.is_empty(), "cannot summarize zero records");
    let trials = records.len() as u64;
    let failures = records.iter().filter(|r| !r.correct).count() as u64;
    let max_ordinary_tests = records.iter().map(|r| r.ordinary_tests).max().unwrap();
    let total_ordinary: u64 = records.iter().map(|r| r.ordinary_tests).sum();

    let mut strategy_costs = BTreeMap::new();
    for strategy in SearchStrategy::ALL {
        let group: Vec<&TrialRecord> =
            records.iter().filter(|r| r.strategy == strategy).collect();
        if group.is_empty() {
            continue;
        }
        let total: u64 = group.iter().map(|r| r.ordinary_tests).sum();
        strategy_costs.insert(
            strategy,
            StrategyCost {
                trials: group.len() as u64,
                mean_ordinary_tests: total as f64 / group.len() as f64,
                max_ordinary_tests: group.iter().map(|r| r.ordinary_tests).max().unwrap(),
            },
        );
    }

    let n = records[0].n;
    let log_cubed = (n as f64).log2().powi(3);
    TrialSummary {
        trials,
        failure_rate: failures as f64 / trials as f64,
        max_ordinary_tests,
        mean_ordinary_tests: total_ordinary as f64 / trials as f64,
        depth_bound_ratio: if log_cubed > 0.0 {
            max_ordinary_tests as f64 / log_cubed
        } else {
            0.0
        },
        strategy_costs,
    }
}

/// Baseline check over the same instances a bench configuration runs on.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BaselineSummary {
    pub trials: u64,
    /// Always n - 1: the elimination tree's exact depth.
    pub tests_per_trial: u64,
    pub all_maximal: bool,
}

/// Run the deterministic baseline on each trial's instance; asserts the exact
/// n-1 test count.
pub fn run_baseline(cfg: &TrialConfig, trials: u64) -> BaselineSummary {
    assert!(trials >= 1, "need at least one trial");
    let all_maximal = (0..trials)
        .into_par_iter()
        .map(|k| {
            let (inst, _) = trial_instance(cfg, k);
            let mut ledger = TestLedger::new();
            let winner = elimination_baseline(&inst, &mut ledger);
            assert_eq!(ledger.ordinary_tests(), cfg.n as u64 - 1);
            inst.is_max(winner)
        })
        .reduce(|| true, |a, b| a && b);
    BaselineSummary { trials, tests_per_trial: cfg.n as u64 - 1, all_maximal }
}
