//! Duplicate-free sets of input positions, kept sorted.

use std::fmt;

use crate::instance::Index;

/// A finite set of 1-based indices. When a set is used as the argument `B` of
/// a gadget with pivot `i`, the pivot must not be a member; the gadget entry
/// points enforce that.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(Vec<Index>);

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    /// Build from an already sorted, duplicate-free vector of 1-based indices.
    pub fn from_sorted(indices: Vec<Index>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]), "indices must be strictly sorted");
        debug_assert!(indices.first().is_none_or(|&a| a >= 1), "indices are 1-based");
        IndexSet(indices)
    }

    pub fn from_unsorted(mut indices: Vec<Index>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self::from_sorted(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: Index) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Index> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Index] {
        &self.0
    }
}

impl FromIterator<Index> for IndexSet {
    fn from_iter<T: IntoIterator<Item = Index>>(iter: T) -> Self {
        Self::from_unsorted(iter.into_iter().collect())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
