//! Ordered vertex sets.

use std::collections::BTreeSet;

use crate::graph::VertexId;

/// A set of vertices iterated in ascending id order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(BTreeSet<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn single(x: VertexId) -> Self {
        std::iter::once(x).collect()
    }

    pub fn insert(&mut self, x: VertexId) -> bool {
        self.0.insert(x)
    }

    pub fn remove(&mut self, x: VertexId) -> bool {
        self.0.remove(&x)
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.0.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn meets(&self, other: &VertexSet) -> bool {
        self.0.iter().any(|x| other.0.contains(x))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn extend_from(&mut self, other: &VertexSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ids: &[usize]) -> VertexSet {
        ids.iter().map(|&i| VertexId(i)).collect()
    }

    #[test]
    fn set_algebra() {
        let a = vs(&[3, 1, 2]);
        let b = vs(&[2, 5]);
        assert_eq!(a.to_vec(), vec![VertexId(1), VertexId(2), VertexId(3)]);
        assert_eq!(a.union(&b), vs(&[1, 2, 3, 5]));
        assert_eq!(a.intersect(&b), vs(&[2]));
        assert_eq!(a.minus(&b), vs(&[1, 3]));
        assert!(a.meets(&b));
        assert!(!vs(&[1]).meets(&b));
        assert!(vs(&[1, 3]).is_subset(&a));
    }
}
