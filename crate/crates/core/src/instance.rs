//! Input instances: exact integer values at positions 1..=n.
//!
//! All algorithmic decisions are value comparisons, so machine integers
//! suffice here; only the literal oracle needs big-integer arithmetic.

use crate::index_set::IndexSet;

/// An input value. Exact: equality and ordering never round.
pub type Value = i64;

/// A 1-based position, matching the serialized convention.
pub type Index = usize;

/// The input vector x_1..x_n, n >= 1. Repeated values are explicitly allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    values: Vec<Value>,
}

impl Instance {
    pub fn new(values: Vec<Value>) -> Self {
        assert!(!values.is_empty(), "an instance needs n >= 1 values");
        Instance { values }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Value at 1-based position `i`.
    pub fn value(&self, i: Index) -> Value {
        assert!(
            (1..=self.values.len()).contains(&i),
            "index {i} out of range 1..={}",
            self.values.len()
        );
        self.values[i - 1]
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    /// J_i: every position holding a value strictly above x_i.
    pub fn above_set(&self, i: Index) -> IndexSet {
        let xi = self.value(i);
        IndexSet::from_sorted((1..=self.n()).filter(|&j| self.values[j - 1] > xi).collect())
    }

    /// |J_i| without materializing the set.
    pub fn above_count(&self, i: Index) -> usize {
        let xi = self.value(i);
        self.values.iter().filter(|&&v| v > xi).count()
    }

    /// mu_B: how many members of `set` hold exactly the pivot's value.
    pub fn tie_count(&self, i: Index, set: &IndexSet) -> usize {
        assert!(!set.contains(i), "pivot {i} must not be a member of B");
        let xi = self.value(i);
        set.iter().filter(|&a| self.value(a) == xi).count()
    }

    pub fn max_value(&self) -> Value {
        *self.values.iter().max().expect("n >= 1")
    }

    pub fn is_max(&self, i: Index) -> bool {
        self.value(i) == self.max_value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn above_set_scans_strictly_greater() {
        let inst = Instance::new(vec![5, 3, 7, 2]);
        assert_eq!(inst.above_set(1).as_slice(), &[3]);
        assert_eq!(Instance::new(vec![4, 4, 4]).above_set(2).as_slice(), &[] as &[usize]);
        assert_eq!(Instance::new(vec![1, 2, 3]).above_set(1).as_slice(), &[2, 3]);
    }

    #[test]
    fn tie_count_examples() {
        let inst = Instance::new(vec![4, 4, 1, 9, 4]);
        assert_eq!(inst.tie_count(1, &IndexSet::from_unsorted(vec![2, 3, 4, 5])), 2);
        let inst = Instance::new(vec![5, 3, 7, 2]);
        assert_eq!(inst.tie_count(1, &IndexSet::from_unsorted(vec![2, 3, 4])), 0);
        let inst = Instance::new(vec![7, 7, 7]);
        assert_eq!(inst.tie_count(1, &IndexSet::from_unsorted(vec![2, 3])), 2);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn value_rejects_out_of_range_index() {
        Instance::new(vec![1, 2]).value(3);
    }

    #[test]
    #[should_panic(expected = "pivot")]
    fn tie_count_rejects_pivot_in_set() {
        let inst = Instance::new(vec![1, 2, 3]);
        inst.tie_count(2, &IndexSet::from_unsorted(vec![1, 2]));
    }

    #[test]
    fn max_helpers() {
        let inst = Instance::new(vec![5, 9, 9, 1]);
        assert_eq!(inst.max_value(), 9);
        assert!(inst.is_max(2) && inst.is_max(3));
        assert!(!inst.is_max(1));
        assert_eq!(inst.above_count(1), 2);
        assert_eq!(inst.above_count(2), 0);
    }
}
