use std::cmp::Ordering;
use std::fmt;

/// A subset of the ray indices `{0, …, r−1}` (`r ≤ 64`), stored as a bitmask.
///
/// Ordered by cardinality, then lexicographically by sorted indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

pub const MAX_RAYS: usize = 64;

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn singleton(i: usize) -> Face {
        assert!(i < MAX_RAYS);
        Face(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Face {
        indices.into_iter().fold(Face::EMPTY, |f, i| f.with(i))
    }

    /// Every subset of `{0, …, r−1}`.
    pub fn full(r: usize) -> Face {
        assert!(r <= MAX_RAYS);
        if r == MAX_RAYS {
            Face(u64::MAX)
        } else {
            Face((1u64 << r) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_RAYS && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Face {
        Face(self.0 | Face::singleton(i).0)
    }

    pub fn without(self, i: usize) -> Face {
        Face(self.0 & !Face::singleton(i).0)
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    /// Sorted indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_RAYS).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Image under a map of indices.
    pub fn map(self, perm: &[usize]) -> Face {
        Face::from_indices(self.indices().map(|i| perm[i]))
    }

    /// 1-based indices, as used in files and reports.
    pub fn to_one_based(self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_by_size_then_lex() {
        let mut v = vec![
            Face::from_indices([1, 2]),
            Face::from_indices([0, 3]),
            Face::from_indices([3]),
            Face::EMPTY,
            Face::from_indices([0, 1, 2]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Face::EMPTY,
                Face::from_indices([3]),
                Face::from_indices([0, 3]),
                Face::from_indices([1, 2]),
                Face::from_indices([0, 1, 2]),
            ]
        );
    }

    #[test]
    fn set_operations() {
        let a = Face::from_indices([0, 2, 5]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(5) && !a.contains(1));
        assert_eq!(a.without(2), Face::from_indices([0, 5]));
        assert!(Face::from_indices([0, 5]).is_subset(a));
        assert_eq!(a.max_index(), Some(5));
        assert_eq!(a.to_one_based(), vec![1, 3, 6]);
        assert_eq!(Face::full(3).bits(), 0b111);
        assert_eq!(a.map(&[1, 0, 3, 2, 4, 0]), Face::from_indices([1, 3, 0]));
    }
}
