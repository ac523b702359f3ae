//! Tie-tolerant randomized maximum finding in the polynomial decision-tree
//! model.
//!
//! A parity test compares the product of (x_i - x_a) over a set B against
//! zero; with repeated values the product can vanish and the test goes blind.
//! The gadget in [`parity`] recovers the tie-free sign with a logarithmic
//! number of unit-cost tests, and [`findmax`] plugs it into the randomized
//! maximum search, keeping the walk correct on inputs with arbitrary ties.
//! [`oracle`] holds the literal big-integer polynomials that certify every
//! semantic answer, and [`verify`], [`harness`], and [`emit`] make up the
//! verification and benchmark surface behind the `tiemax` CLI.

pub mod emit;
pub mod findmax;
pub mod generate;
pub mod harness;
pub mod index_set;
pub mod instance;
pub mod ledger;
pub mod oracle;
pub mod parity;
pub mod rat;
pub mod sign;
pub mod util;
pub mod verify;

pub use findmax::{
    descend_witness, elimination_baseline, find_max, probe_stage, sample_subset, Params,
    ParamsError, RunOutcome, RunTrace, StageResult,
};
pub use generate::{generate_instance, GeneratorKind, GeneratorSpec};
pub use harness::{
    run_baseline, run_trial, run_trials, run_trials_traced, summarize, BaselineSummary,
    StrategyCost, TrialConfig, TrialOutput, TrialRecord, TrialSummary,
};
pub use index_set::IndexSet;
pub use instance::{Index, Instance, Value};
pub use ledger::TestLedger;
pub use oracle::{literal_p, literal_pi, literal_r, OracleError, ORACLE_SET_CAP};
pub use parity::{
    find_mu, r_test, simulate_parity, simulate_parity_opts, SearchStrategy, SimulatedSign,
};
pub use rat::{parse_rat, Rat};
pub use sign::{sign_of, SignOutcome};
pub use verify::{verify_oracle_suite, CheckStats, VerifyReport};
