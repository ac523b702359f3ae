//! The oracle certification suite: every semantic answer the runtime gives is
//! replayed against the literal brute-force polynomials.
//!
//! Small instances are swept exhaustively (all value patterns over {0,1,2},
//! all pivots, all subsets, all thresholds); larger ones are sampled. Four
//! checks run on every gadget argument:
//!
//! (a) each R-test agrees with whether the literal R value is zero,
//! (b) the simulated sign and tie count agree with the literal Pi value,
//! (c) the literal Pi sign obeys the parity law and is never zero,
//! (d) per-call test counts respect the strategy cost bounds.

use std::io;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::index_set::IndexSet;
use crate::instance::{Index, Instance};
use crate::ledger::TestLedger;
use crate::oracle::{literal_pi, literal_r, ORACLE_SET_CAP};
use crate::parity::{r_test, simulate_parity, SearchStrategy};
use crate::sign::{sign_of, SignOutcome};
use crate::util::ceil_log2;

#[derive(Debug, Clone)]
pub struct CheckStats {
    pub name: &'static str,
    pub cases: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<String>,
}

impl CheckStats {
    fn new(name: &'static str) -> Self {
        CheckStats { name, cases: 0, mismatches: 0, first_mismatch: None }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.mismatches += 1;
            if self.first_mismatch.is_none() {
                self.first_mismatch = Some(detail());
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub max_n: usize,
    pub value_range: RangeInclusive<i64>,
    pub exhaustive_instances: u64,
    pub random_cases: u64,
    pub checks: Vec<CheckStats>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.mismatches == 0)
    }

    pub fn write_text<W: io::Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(
            w,
            "exhaustive sweep: values {{0,1,2}}, n <= {}: {} instances",
            self.max_n.min(5),
            self.exhaustive_instances
        )?;
        writeln!(
            w,
            "random sweep: {} cases, n <= {}, values [{},{}]",
            self.random_cases,
            self.max_n,
            self.value_range.start(),
            self.value_range.end()
        )?;
        for check in &self.checks {
            writeln!(
                w,
                "check {}: cases={} mismatches={}",
                check.name, check.cases, check.mismatches
            )?;
            if let Some(detail) = &check.first_mismatch {
                writeln!(w, "  first mismatch: {detail}")?;
            }
        }
        writeln!(w, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

struct Checks {
    r_vs_literal: CheckStats,
    sim_vs_literal: CheckStats,
    parity_law: CheckStats,
    cost_bounds: CheckStats,
}

impl Checks {
    fn new() -> Self {
        Checks {
            r_vs_literal: CheckStats::new("r-test-vs-literal-R"),
            sim_vs_literal: CheckStats::new("sim-sign-vs-literal-Pi"),
            parity_law: CheckStats::new("sign-parity-law"),
            cost_bounds: CheckStats::new("cost-bounds"),
        }
    }

    fn into_vec(self) -> Vec<CheckStats> {
        vec![self.r_vs_literal, self.sim_vs_literal, self.parity_law, self.cost_bounds]
    }
}

fn describe(inst: &Instance, i: Index, set: &IndexSet) -> String {
    format!("inst={:?} i={i} B={set}", inst.values())
}

/// Run all four checks on one gadget argument (i, B).
fn check_gadget(inst: &Instance, i: Index, set: &IndexSet, checks: &mut Checks) {
    // (a) every threshold
    for t in 0..=set.len() {
        let mut ledger = TestLedger::new();
        let semantic = r_test(inst, i, set, t, &mut ledger);
        let literal = literal_r(inst, i, set, t).expect("valid oracle arguments");
        checks.r_vs_literal.record(semantic == (sign_of(&literal) == SignOutcome::Zero), || {
            format!("{} t={t}: r_test={semantic} literal_R={literal}", describe(inst, i, set))
        });
    }

    let mu = inst.tie_count(i, set);
    let pi = literal_pi(inst, i, set, mu).expect("valid oracle arguments");
    let pi_sign = sign_of(&pi);
    let above = set.iter().filter(|&a| inst.value(a) > inst.value(i)).count();

    // (c) the literal parity product obeys the sign law and never vanishes
    checks.parity_law.record(
        pi_sign == SignOutcome::from_parity(above) && pi_sign != SignOutcome::Zero,
        || format!("{}: literal_Pi={pi} |B∩J_i|={above}", describe(inst, i, set)),
    );

    for strategy in SearchStrategy::ALL {
        let mut ledger = TestLedger::new();
        let sim = simulate_parity(inst, i, set, strategy, &mut ledger);

        // (b) simulated answer vs literal value
        checks.sim_vs_literal.record(sim.sign == pi_sign && sim.mu == mu, || {
            format!(
                "{} strategy={strategy}: sim=({:?}, mu={}) literal_Pi={pi} mu={mu}",
                describe(inst, i, set),
                sim.sign,
                sim.mu
            )
        });

        // (d) per-call cost bounds
        let ok = match strategy {
            SearchStrategy::Binary => {
                let bound = ceil_log2(set.len() as u64 + 1);
                sim.r_tests <= bound && sim.r_tests + sim.pi_tests <= bound + 1
            }
            SearchStrategy::Exponential => sim.r_tests <= 2 * ceil_log2(mu as u64 + 2) + 1,
        };
        checks.cost_bounds.record(ok, || {
            format!(
                "{} strategy={strategy}: r_tests={} pi_tests={} mu={mu}",
                describe(inst, i, set),
                sim.r_tests,
                sim.pi_tests
            )
        });
    }
}

fn for_each_subset(inst: &Instance, i: Index, checks: &mut Checks) {
    let others: Vec<Index> = (1..=inst.n()).filter(|&j| j != i).collect();
    for mask in 0u32..(1 << others.len()) {
        let members: Vec<Index> = others
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &j)| j)
            .collect();
        let set = IndexSet::from_sorted(members);
        check_gadget(inst, i, &set, checks);
    }
}

/// Run the full suite: exhaustive for n <= 5 over values {0,1,2}, then
/// `random_cases` sampled arguments with n up to `max_n` and values drawn
/// from `value_range`.
pub fn verify_oracle_suite(
    max_n: usize,
    value_range: RangeInclusive<i64>,
    random_cases: u64,
    seed: u64,
) -> VerifyReport {
    assert!(max_n >= 1, "max_n must be at least 1");
    assert!(max_n <= ORACLE_SET_CAP, "max_n exceeds the oracle cap {ORACLE_SET_CAP}");
    let mut checks = Checks::new();

    // exhaustive sweep: every tie pattern three values can express
    let mut exhaustive_instances = 0u64;
    for n in 1..=max_n.min(5) {
        let patterns = 3usize.pow(n as u32);
        for pattern in 0..patterns {
            let mut values = Vec::with_capacity(n);
            let mut rest = pattern;
            for _ in 0..n {
                values.push((rest % 3) as i64);
                rest /= 3;
            }
            let inst = Instance::new(values);
            exhaustive_instances += 1;
            for i in 1..=n {
                for_each_subset(&inst, i, &mut checks);
            }
        }
    }

    // random sweep up to max_n
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _ in 0..random_cases {
        let n = rng.random_range(1..=max_n);
        let values: Vec<i64> =
            (0..n).map(|_| rng.random_range(value_range.clone())).collect();
        let inst = Instance::new(values);
        let i = rng.random_range(1..=n);
        let members: Vec<Index> = (1..=n).filter(|&j| j != i && rng.random::<bool>()).collect();
        let set = IndexSet::from_sorted(members);
        check_gadget(&inst, i, &set, &mut checks);
    }

    VerifyReport {
        max_n,
        value_range,
        exhaustive_instances,
        random_cases,
        checks: checks.into_vec(),
    }
}
