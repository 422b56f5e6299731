//! Degree multisets: degree value to number of vertices with that degree.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;

/// Compressed degree sequence. Every stored multiplicity is at least one and
/// the multiplicities sum to `order`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeMultiset {
    counts: BTreeMap<usize, usize>,
    order: usize,
}

impl DegreeMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut m = Self::new();
        for d in degrees {
            m.add(d, 1);
        }
        m
    }

    /// Builds a multiset from `(degree, multiplicity)` pairs. Zero
    /// multiplicities are dropped and repeated degrees are merged.
    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut m = Self::new();
        for (d, c) in pairs {
            m.add(d, c);
        }
        m
    }

    /// Adds `count` vertices of degree `degree`.
    pub fn add(&mut self, degree: usize, count: usize) {
        if count == 0 {
            return;
        }
        *self.counts.entry(degree).or_insert(0) += count;
        self.order += count;
    }

    /// Total number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    /// Multiplicity of `degree` (zero when absent).
    pub fn count(&self, degree: usize) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    /// Number of distinct degree values.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    /// `(degree, multiplicity)` pairs in increasing degree order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    pub fn max_multiplicity(&self) -> Option<usize> {
        self.counts.values().copied().max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// The regular degree when exactly one degree value occurs.
    pub fn regular_degree(&self) -> Option<usize> {
        (self.counts.len() == 1)
            .then(|| self.min_degree())
            .flatten()
    }

    /// Expands to the non-increasing degree sequence.
    pub fn to_sorted_sequence(&self) -> Vec<usize> {
        let mut seq = Vec::with_capacity(self.order);
        for (d, c) in self.iter().rev() {
            seq.extend(core::iter::repeat_n(d, c));
        }
        seq
    }
}

impl<'a> IntoIterator for &'a DegreeMultiset {
    type Item = (&'a usize, &'a usize);
    type IntoIter = btree_map::Iter<'a, usize, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.counts.iter()
    }
}
