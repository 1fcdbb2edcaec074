use std::fmt;

/// A set of vertices of a graph with at most 64 vertices, stored as a bitmask.
///
/// The set does not know the order of the graph it belongs to; the owning
/// [`Graph`](crate::Graph) checks that no bit at position `>= n` is set.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All vertices `0..n`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[must_use]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.0.count_ones() as usize;
        (len, Some(len))
    }
}

impl ExactSizeIterator for Iter {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s: VertexSet = [5, 0, 63, 2].into_iter().collect();
        assert_eq!(s.to_vec(), vec![0, 2, 5, 63]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn full_edge_cases() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(3).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [0, 1, 2].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!(a.union(b).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.difference(b).to_vec(), vec![0, 1]);
        assert!(!a.is_disjoint(b));
        assert!(VertexSet::singleton(2).is_subset(a));
        assert_eq!(VertexSet::EMPTY.first(), None);
    }
}
