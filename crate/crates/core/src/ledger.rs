//! Unit-cost accounting for the decision-tree model.
//!
//! Every charged test costs one unit regardless of the polynomial's size or
//! degree; depth bounds are statements about these counters. Fields are
//! private so the counters can only grow.

use serde::Serialize;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TestLedger {
    ordinary_tests: u64,
    simulated_parity_tests: u64,
}

impl TestLedger {
    pub fn new() -> Self {
        TestLedger::default()
    }

    /// Charge `count` ordinary polynomial sign tests (R-tests, Pi-tests, or
    /// baseline comparisons).
    pub fn charge_ordinary(&mut self, count: u64) {
        self.ordinary_tests += count;
    }

    /// Charge one gadget invocation.
    pub fn charge_simulated_parity(&mut self) {
        self.simulated_parity_tests += 1;
    }

    pub fn ordinary_tests(&self) -> u64 {
        self.ordinary_tests
    }

    pub fn simulated_parity_tests(&self) -> u64 {
        self.simulated_parity_tests
    }
}
