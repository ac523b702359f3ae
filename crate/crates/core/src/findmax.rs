//! The randomized maximum search built on simulated parity tests, plus the
//! deterministic elimination baseline.
//!
//! One round probes the current pivot with up to `m` random subsets; a
//! negative answer certifies that the subset holds an odd number of strictly
//! larger values, and a bisection descent extracts one of them to become the
//! next pivot. The walk declares when a full round of probes comes back
//! positive and fails after `m0` rounds without a declaration.

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::index_set::IndexSet;
use crate::instance::{Index, Instance};
use crate::ledger::TestLedger;
use crate::parity::{simulate_parity, SearchStrategy};
use crate::rat::{rat_string, Rat};
use crate::sign::SignOutcome;
use crate::util::ceil_log2;

/// Run parameters. `m` (probes per round) and `m0` (round budget) are derived
/// from the input size and the failure exponent c.
#[derive(Debug, Clone, Serialize)]
pub struct Params {
    pub n: usize,
    #[serde(with = "rat_string")]
    pub c: Rat,
    pub m: u64,
    pub m0: u64,
    pub strategy: SearchStrategy,
    pub seed: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamsError {
    #[error("failure exponent c must be positive")]
    NonPositiveC,
    #[error("instance size n must be at least 1")]
    EmptyInstance,
}

impl Params {
    /// m = ceil(3c log2 n), m0 = floor(10c log2 n), evaluated exactly through
    /// big-integer power comparisons; floats would misround exactly at the
    /// power-of-two boundaries these formulas hit most often. Both are
    /// clamped to at least 1 so a run can always make progress.
    pub fn derive(
        n: usize,
        c: Rat,
        strategy: SearchStrategy,
        seed: u64,
    ) -> Result<Params, ParamsError> {
        if n == 0 {
            return Err(ParamsError::EmptyInstance);
        }
        if *c.numer() == 0 {
            return Err(ParamsError::NonPositiveC);
        }
        let m = scaled_log2_ceil(n as u64, c * Rat::from_integer(3)).max(1);
        let m0 = scaled_log2_floor(n as u64, c * Rat::from_integer(10)).max(1);
        Ok(Params { n, c, m, m0, strategy, seed })
    }

    /// Simulated parity tests one round may charge: m probes plus the descent.
    pub fn round_sim_budget(&self) -> u64 {
        if self.n <= 1 {
            return self.m;
        }
        self.m + ceil_log2(self.n as u64 - 1)
    }

    /// Deterministic ordinary-test ceiling for a whole run: rounds times
    /// per-round simulated tests times the binary-search cost of one gadget.
    pub fn ordinary_ceiling(&self) -> u64 {
        self.m0 * self.round_sim_budget() * (ceil_log2(self.n as u64) + 1)
    }
}

fn big_ceil_log2(t: &BigUint) -> u64 {
    if t <= &BigUint::from(1u32) {
        0
    } else {
        (t - 1u32).bits()
    }
}

fn big_floor_log2(t: &BigUint) -> u64 {
    assert!(t >= &BigUint::from(1u32));
    t.bits() - 1
}

/// ceil((p/q) * log2 n) = ceil(ceil(log2 n^p) / q): exact for all n.
fn scaled_log2_ceil(n: u64, factor: Rat) -> u64 {
    let p = u32::try_from(*factor.numer()).expect("factor numerator too large");
    let target = BigUint::from(n).pow(p);
    big_ceil_log2(&target).div_ceil(*factor.denom())
}

/// floor((p/q) * log2 n) = floor(floor(log2 n^p) / q): exact for all n.
fn scaled_log2_floor(n: u64, factor: Rat) -> u64 {
    let p = u32::try_from(*factor.numer()).expect("factor numerator too large");
    let target = BigUint::from(n).pow(p);
    big_floor_log2(&target) / *factor.denom()
}

/// Outcome of one probing stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StageResult {
    /// Every probe answered positive: the pivot is believed maximal.
    Declared,
    /// The first subset whose simulated answer was negative; it holds an odd
    /// number of indices strictly above the pivot.
    Witness(IndexSet),
}

/// How a run ended, judged against ground truth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunOutcome {
    DeclaredCorrect,
    DeclaredWrong,
    Exhausted,
}

/// Full record of one run. `r_sequence` is read from ground truth for
/// analysis only; the algorithm itself never sees those values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunTrace {
    pub pivots: Vec<Index>,
    pub r_sequence: Vec<usize>,
    pub outcome: RunOutcome,
    pub rounds: u64,
    pub final_pivot_is_max: bool,
    pub ledger: TestLedger,
}

/// Uniform random subset of [n] \ {i}: every other index joins independently
/// with probability 1/2; the empty set is a legitimate draw.
pub fn sample_subset<R: Rng>(rng: &mut R, n: usize, i: Index) -> IndexSet {
    assert!((1..=n).contains(&i), "pivot {i} out of range 1..={n}");
    IndexSet::from_sorted((1..=n).filter(|&j| j != i && rng.random::<bool>()).collect())
}

/// One probing stage at pivot `i`: draw up to `m` random subsets and simulate
/// each parity test, stopping at the first negative answer. A maximal pivot
/// always gets declared; any other pivot escapes with probability 1 - 2^-m.
pub fn probe_stage<R: Rng>(
    inst: &Instance,
    i: Index,
    params: &Params,
    rng: &mut R,
    ledger: &mut TestLedger,
) -> StageResult {
    for _ in 0..params.m {
        let set = sample_subset(rng, inst.n(), i);
        let sim = simulate_parity(inst, i, &set, params.strategy, ledger);
        if sim.sign == SignOutcome::Negative {
            return StageResult::Witness(set);
        }
    }
    StageResult::Declared
}

/// Bisect a witness set down to a single index strictly above the pivot,
/// spending at most ceil(log2 |B|) simulated parity tests.
///
/// Requires |B ∩ J_i| odd, which a negative parity answer certifies; the
/// invariant is maintained because exactly one half of an odd split is odd.
/// The order is shuffled once up front: which test outcomes occur depends
/// only on where the above-pivot members land, so conditioned on the
/// returned position, every above-pivot member is equally likely to occupy
/// it — the returned index is uniform on B ∩ J_i.
pub fn descend_witness<R: Rng>(
    inst: &Instance,
    i: Index,
    witness: &IndexSet,
    strategy: SearchStrategy,
    rng: &mut R,
    ledger: &mut TestLedger,
) -> Index {
    assert!(!witness.is_empty(), "witness set cannot be empty");
    let sims_before = ledger.simulated_parity_tests();
    let mut order: Vec<Index> = witness.iter().collect();
    order.shuffle(rng);
    while order.len() > 1 {
        let half = order.len().div_ceil(2);
        let first: IndexSet = order[..half].iter().copied().collect();
        let sim = simulate_parity(inst, i, &first, strategy, ledger);
        if sim.sign == SignOutcome::Negative {
            order.truncate(half);
        } else {
            order.drain(..half);
        }
    }
    assert!(
        ledger.simulated_parity_tests() - sims_before <= ceil_log2(witness.len() as u64),
        "descent exceeded its simulated-test budget"
    );
    let found = order[0];
    assert!(
        inst.value(found) > inst.value(i),
        "descent from pivot {i} ended at {found}, which is not above it"
    );
    found
}

/// The full randomized maximum search. Starts at pivot 1, runs at most `m0`
/// rounds, and returns the declared index or `None` on exhaustion, along
/// with the trace of the walk.
pub fn find_max<R: Rng>(
    inst: &Instance,
    params: &Params,
    rng: &mut R,
) -> (Option<Index>, RunTrace) {
    let n = inst.n();
    if n == 1 {
        // A single element is its own maximum; no tests needed.
        let trace = RunTrace {
            pivots: vec![1],
            r_sequence: vec![0],
            outcome: RunOutcome::DeclaredCorrect,
            rounds: 0,
            final_pivot_is_max: true,
            ledger: TestLedger::new(),
        };
        return (Some(1), trace);
    }

    let mut ledger = TestLedger::new();
    let mut pivots = Vec::new();
    let mut r_sequence: Vec<usize> = Vec::new();
    let mut pivot: Index = 1;
    let mut declared = None;
    let mut rounds = 0u64;

    for _ in 0..params.m0 {
        rounds += 1;
        pivots.push(pivot);
        let r_here = inst.above_count(pivot);
        if let Some(&r_prev) = r_sequence.last() {
            assert!(r_here < r_prev, "pivot walk must strictly descend in r");
        }
        r_sequence.push(r_here);

        let sims_before = ledger.simulated_parity_tests();
        let stage = probe_stage(inst, pivot, params, rng, &mut ledger);
        match stage {
            StageResult::Declared => {
                declared = Some(pivot);
            }
            StageResult::Witness(set) => {
                pivot = descend_witness(inst, pivot, &set, params.strategy, rng, &mut ledger);
            }
        }
        assert!(
            ledger.simulated_parity_tests() - sims_before <= params.round_sim_budget(),
            "round exceeded its simulated-test budget"
        );
        if declared.is_some() {
            break;
        }
    }

    assert!(
        ledger.ordinary_tests() <= params.ordinary_ceiling(),
        "run exceeded the deterministic ordinary-test ceiling"
    );

    let outcome = match declared {
        Some(ix) if inst.is_max(ix) => RunOutcome::DeclaredCorrect,
        Some(_) => RunOutcome::DeclaredWrong,
        None => RunOutcome::Exhausted,
    };
    let trace = RunTrace {
        pivots,
        r_sequence,
        outcome,
        rounds,
        final_pivot_is_max: inst.is_max(pivot),
        ledger,
    };
    (declared, trace)
}

/// Left-to-right elimination tournament: compares (x_cur - x_j) to zero and
/// keeps the current index unless strictly beaten. Exactly n-1 ordinary
/// tests, always a true maximizer (the earliest one).
pub fn elimination_baseline(inst: &Instance, ledger: &mut TestLedger) -> Index {
    let mut cur: Index = 1;
    for j in 2..=inst.n() {
        ledger.charge_ordinary(1);
        if inst.value(j) > inst.value(cur) {
            cur = j;
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn params(n: usize, c: Rat, strategy: SearchStrategy, seed: u64) -> Params {
        Params::derive(n, c, strategy, seed).unwrap()
    }

    #[test]
    fn derive_matches_formula_examples() {
        let p = params(1024, Rat::from_integer(1), SearchStrategy::Binary, 0);
        assert_eq!((p.m, p.m0), (30, 100));
        let p = params(2, Rat::from_integer(1), SearchStrategy::Binary, 0);
        assert_eq!((p.m, p.m0), (3, 10));
        // fractional c: m = ceil(1.5 * 10) = 15, m0 = floor(5 * 10) = 50
        let p = params(1024, Rat::new(1, 2), SearchStrategy::Binary, 0);
        assert_eq!((p.m, p.m0), (15, 50));
        // c = 3/2 on n = 8: m = ceil(4.5 * 3) = 14, m0 = floor(15 * 3) = 45
        let p = params(8, Rat::new(3, 2), SearchStrategy::Binary, 0);
        assert_eq!((p.m, p.m0), (14, 45));
    }

    #[test]
    fn derive_is_exact_at_power_of_two_boundaries() {
        for k in 1..=16u32 {
            let p = params(1 << k, Rat::from_integer(1), SearchStrategy::Binary, 0);
            assert_eq!(p.m, 3 * u64::from(k));
            assert_eq!(p.m0, 10 * u64::from(k));
        }
    }

    #[test]
    fn derive_agrees_with_float_away_from_boundaries() {
        for n in [3usize, 5, 100, 1000, 4095] {
            for (num, den) in [(1, 1), (2, 1), (1, 2), (3, 4)] {
                let p = params(n, Rat::new(num, den), SearchStrategy::Binary, 0);
                let c = num as f64 / den as f64;
                let log_n = (n as f64).log2();
                assert_eq!(p.m, (3.0 * c * log_n).ceil() as u64, "m at n={n} c={num}/{den}");
                assert_eq!(p.m0, (10.0 * c * log_n).floor() as u64, "m0 at n={n} c={num}/{den}");
            }
        }
    }

    #[test]
    fn derive_rejects_bad_arguments() {
        assert_eq!(
            Params::derive(8, Rat::new(0, 1), SearchStrategy::Binary, 0).unwrap_err(),
            ParamsError::NonPositiveC
        );
        assert_eq!(
            Params::derive(0, Rat::from_integer(1), SearchStrategy::Binary, 0).unwrap_err(),
            ParamsError::EmptyInstance
        );
    }

    #[test]
    fn round_budget_clamps_tiny_c() {
        // 10 * (1/100) * log2(2) = 0.1 floors to 0; clamped so a run can start
        let p = params(2, Rat::new(1, 100), SearchStrategy::Binary, 0);
        assert_eq!(p.m0, 1);
        assert!(p.m >= 1);
    }

    #[test]
    fn sample_subset_stays_in_range_and_excludes_pivot() {
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        for _ in 0..200 {
            let set = sample_subset(&mut rng, 9, 4);
            assert!(!set.contains(4));
            assert!(set.iter().all(|j| (1..=9).contains(&j)));
        }
        // n = 1 leaves nothing to draw
        assert!(sample_subset(&mut rng, 1, 1).is_empty());
    }

    #[test]
    fn sample_subset_is_deterministic_in_seed() {
        let draw = |seed| {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            (0..20).map(|_| sample_subset(&mut rng, 12, 3)).collect::<Vec<_>>()
        };
        assert_eq!(draw(11), draw(11));
        assert_ne!(draw(11), draw(12));
    }

    #[test]
    fn sample_subset_is_uniform_over_all_subsets() {
        // n = 3, i = 2: four possible draws, each with probability 1/4
        let mut rng = ChaCha12Rng::seed_from_u64(2024);
        let draws = 100_000u64;
        let mut counts = [0u64; 4];
        let mut member_1 = 0u64;
        let mut member_3 = 0u64;
        for _ in 0..draws {
            let set = sample_subset(&mut rng, 3, 2);
            let key = usize::from(set.contains(1)) | (usize::from(set.contains(3)) << 1);
            counts[key] += 1;
            member_1 += u64::from(set.contains(1));
            member_3 += u64::from(set.contains(3));
        }
        // chi-square, 3 degrees of freedom, significance 1e-3
        let expected = draws as f64 / 4.0;
        let chi2: f64 =
            counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        assert!(chi2 < 16.266, "chi-square {chi2} too large: counts {counts:?}");
        // membership marginals are 1/2 each
        for count in [member_1, member_3] {
            let freq = count as f64 / draws as f64;
            assert!((freq - 0.5).abs() < 0.01, "marginal {freq} off from 1/2");
        }
    }

    #[test]
    fn probe_stage_witness_frequency_on_two_elements() {
        // on [1, 2] with pivot 1 and m = 3, each probe draws {2} with
        // probability 1/2 and then answers negative, so a witness appears
        // with probability 1 - 2^-3 = 7/8
        let inst = Instance::new(vec![1, 2]);
        let p = Params {
            n: 2,
            c: Rat::from_integer(1),
            m: 3,
            m0: 10,
            strategy: SearchStrategy::Binary,
            seed: 0,
        };
        let stages = 20_000u64;
        let mut rng = ChaCha12Rng::seed_from_u64(77);
        let mut witnesses = 0u64;
        for _ in 0..stages {
            let mut ledger = TestLedger::new();
            if let StageResult::Witness(set) = probe_stage(&inst, 1, &p, &mut rng, &mut ledger) {
                assert_eq!(set.as_slice(), &[2]);
                witnesses += 1;
            }
        }
        let freq = witnesses as f64 / stages as f64;
        assert!((freq - 0.875).abs() < 0.01, "witness frequency {freq} off from 7/8");
    }

    #[test]
    fn probe_stage_declares_on_all_equal() {
        let inst = Instance::new(vec![7, 7, 7]);
        let p = params(3, Rat::from_integer(1), SearchStrategy::Binary, 0);
        for seed in 0..50 {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let mut ledger = TestLedger::new();
            let stage = probe_stage(&inst, 1, &p, &mut rng, &mut ledger);
            assert_eq!(stage, StageResult::Declared);
            assert_eq!(ledger.simulated_parity_tests(), p.m);
        }
    }

    #[test]
    fn probe_stage_witness_certifies_odd_intersection() {
        let inst = Instance::new(vec![2, 5, 5, 1, 2]);
        let p = params(5, Rat::from_integer(1), SearchStrategy::Binary, 0);
        let mut witnesses = 0;
        for seed in 0..40 {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let mut ledger = TestLedger::new();
            if let StageResult::Witness(set) = probe_stage(&inst, 1, &p, &mut rng, &mut ledger) {
                let above = inst.above_set(1);
                let overlap = set.iter().filter(|&j| above.contains(j)).count();
                assert_eq!(overlap % 2, 1);
                witnesses += 1;
            }
        }
        assert!(witnesses > 0);
    }

    #[test]
    fn descend_examples() {
        // singleton above-set: always lands on index 3
        let inst = Instance::new(vec![5, 3, 7, 2]);
        let witness = IndexSet::from_unsorted(vec![2, 3, 4]);
        for seed in 0..20 {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let mut ledger = TestLedger::new();
            let found =
                descend_witness(&inst, 1, &witness, SearchStrategy::Binary, &mut rng, &mut ledger);
            assert_eq!(found, 3);
            assert!(ledger.simulated_parity_tests() <= 2);
        }

        // |B| = 1 costs nothing
        let inst = Instance::new(vec![1, 2]);
        let single = IndexSet::from_unsorted(vec![2]);
        let mut rng = ChaCha12Rng::seed_from_u64(0);
        let mut ledger = TestLedger::new();
        let found = descend_witness(&inst, 1, &single, SearchStrategy::Binary, &mut rng, &mut ledger);
        assert_eq!(found, 2);
        assert_eq!(ledger.simulated_parity_tests(), 0);
    }

    #[test]
    #[should_panic(expected = "not above")]
    fn descend_rejects_even_intersection() {
        // |B ∩ J_1| = 0: the invariant the caller must supply is violated
        let inst = Instance::new(vec![1, 0, 0]);
        let witness = IndexSet::from_unsorted(vec![2, 3]);
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let mut ledger = TestLedger::new();
        descend_witness(&inst, 1, &witness, SearchStrategy::Binary, &mut rng, &mut ledger);
    }

    #[test]
    fn find_max_trivial_cases() {
        let inst = Instance::new(vec![7, 7, 7]);
        let p = params(3, Rat::from_integer(1), SearchStrategy::Binary, 0);
        let mut rng = ChaCha12Rng::seed_from_u64(1);
        let (found, trace) = find_max(&inst, &p, &mut rng);
        assert_eq!(found, Some(1));
        assert_eq!(trace.rounds, 1);
        assert_eq!(trace.outcome, RunOutcome::DeclaredCorrect);

        let single = Instance::new(vec![42]);
        let p = params(1, Rat::from_integer(1), SearchStrategy::Binary, 0);
        let (found, trace) = find_max(&single, &p, &mut rng);
        assert_eq!(found, Some(1));
        assert_eq!(trace.ledger.ordinary_tests(), 0);
        assert_eq!(trace.ledger.simulated_parity_tests(), 0);
    }

    #[test]
    fn find_max_declares_true_max_on_small_inputs() {
        let inst = Instance::new(vec![3, 1, 4, 1, 5, 9, 2, 6, 5, 3]);
        let p = params(10, Rat::from_integer(1), SearchStrategy::Binary, 0);
        for seed in 0..50 {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let (found, trace) = find_max(&inst, &p, &mut rng);
            assert_eq!(found, Some(6));
            assert_eq!(trace.outcome, RunOutcome::DeclaredCorrect);
            assert!(trace.r_sequence.windows(2).all(|w| w[1] < w[0]));
        }
    }

    #[test]
    fn exhaustion_is_failure_even_if_final_pivot_is_max() {
        // m0 = 1 and a witness in round 1: the run ends undeclared
        let inst = Instance::new(vec![1, 2]);
        let p = Params {
            n: 2,
            c: Rat::new(1, 100),
            m: 3,
            m0: 1,
            strategy: SearchStrategy::Binary,
            seed: 0,
        };
        let mut seen_exhausted = false;
        for seed in 0..100 {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let (found, trace) = find_max(&inst, &p, &mut rng);
            if trace.outcome == RunOutcome::Exhausted {
                assert_eq!(found, None);
                assert!(trace.final_pivot_is_max, "descend must have reached index 2");
                seen_exhausted = true;
                break;
            }
        }
        assert!(seen_exhausted, "no seed in 0..100 produced a witness round");
    }

    #[test]
    fn wrong_declaration_is_classified() {
        // m = 1 on [1, 2]: drawing the empty subset declares pivot 1, which
        // is not maximal
        let inst = Instance::new(vec![1, 2]);
        let p = Params {
            n: 2,
            c: Rat::from_integer(1),
            m: 1,
            m0: 10,
            strategy: SearchStrategy::Binary,
            seed: 0,
        };
        let mut seen_wrong = false;
        for seed in 0..100 {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let (found, trace) = find_max(&inst, &p, &mut rng);
            if trace.outcome == RunOutcome::DeclaredWrong {
                assert_eq!(found, Some(1));
                seen_wrong = true;
                break;
            }
        }
        assert!(seen_wrong, "no seed in 0..100 declared the non-max pivot");
    }

    #[test]
    fn baseline_examples() {
        let mut ledger = TestLedger::new();
        assert_eq!(elimination_baseline(&Instance::new(vec![5, 3, 7, 2]), &mut ledger), 3);
        assert_eq!(ledger.ordinary_tests(), 3);

        let mut ledger = TestLedger::new();
        assert_eq!(elimination_baseline(&Instance::new(vec![4, 4]), &mut ledger), 1);
        assert_eq!(ledger.ordinary_tests(), 1);

        let mut ledger = TestLedger::new();
        assert_eq!(elimination_baseline(&Instance::new(vec![9]), &mut ledger), 1);
        assert_eq!(ledger.ordinary_tests(), 0);
    }
}
