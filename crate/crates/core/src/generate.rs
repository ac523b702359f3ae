//! Seed-deterministic input generators.
//!
//! Values are small non-negative integers: the algorithm is comparison
//! driven, so magnitudes are irrelevant, and small values keep the literal
//! oracle cheap in the verification suites.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::instance::{Instance, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// A random permutation of 1..n: no ties at all.
    Distinct,
    /// About sqrt(n) distinct values, each appearing about sqrt(n) times.
    BalancedMultiset,
    /// One constant value: everything ties.
    AllEqual,
    /// A single maximum, every other position tied one below it.
    OneMaxRestTied,
    /// Half low values, half high values, positions shuffled.
    TwoLevel,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 5] = [
        GeneratorKind::Distinct,
        GeneratorKind::BalancedMultiset,
        GeneratorKind::AllEqual,
        GeneratorKind::OneMaxRestTied,
        GeneratorKind::TwoLevel,
    ];
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = match self {
            GeneratorKind::Distinct => "distinct",
            GeneratorKind::BalancedMultiset => "balanced-multiset",
            GeneratorKind::AllEqual => "all-equal",
            GeneratorKind::OneMaxRestTied => "one-max-rest-tied",
            GeneratorKind::TwoLevel => "two-level",
        };
        write!(f, "{token}")
    }
}

impl FromStr for GeneratorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "distinct" => Ok(GeneratorKind::Distinct),
            "balanced-multiset" => Ok(GeneratorKind::BalancedMultiset),
            "all-equal" => Ok(GeneratorKind::AllEqual),
            "one-max-rest-tied" => Ok(GeneratorKind::OneMaxRestTied),
            "two-level" => Ok(GeneratorKind::TwoLevel),
            other => Err(format!(
                "unknown generator {other:?} (distinct|balanced-multiset|all-equal|one-max-rest-tied|two-level)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub seed: u64,
}

/// Generate an instance; deterministic in (kind, n, seed).
pub fn generate_instance(spec: &GeneratorSpec) -> Instance {
    assert!(spec.n >= 1, "generators need n >= 1");
    let mut rng = ChaCha12Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let values: Vec<Value> = match spec.kind {
        GeneratorKind::Distinct => {
            let mut v: Vec<Value> = (1..=n as Value).collect();
            v.shuffle(&mut rng);
            v
        }
        GeneratorKind::BalancedMultiset => {
            let mut v = balanced_values(n);
            v.shuffle(&mut rng);
            v
        }
        GeneratorKind::AllEqual => vec![1; n],
        GeneratorKind::OneMaxRestTied => {
            let mut v = vec![1; n];
            v[rng.random_range(0..n)] = 2;
            v
        }
        GeneratorKind::TwoLevel => {
            let highs = n / 2;
            let mut v = vec![0; n];
            v[..highs].fill(1);
            v.shuffle(&mut rng);
            v
        }
    };
    Instance::new(values)
}

/// The tie-heavy multiset: k = ceil(n / ceil(sqrt n)) distinct values whose
/// multiplicities are floor(sqrt n) or ceil(sqrt n) and sum to n; the first
/// n mod k values carry the extra copy.
pub fn balanced_values(n: usize) -> Vec<Value> {
    let root = n.isqrt();
    let per_value = if root * root == n { root } else { root + 1 };
    let k = n.div_ceil(per_value);
    let base = n / k;
    let extra = n % k;
    let mut values = Vec::with_capacity(n);
    for v in 0..k {
        let copies = base + usize::from(v < extra);
        values.extend(std::iter::repeat_n(v as Value, copies));
    }
    values
}
