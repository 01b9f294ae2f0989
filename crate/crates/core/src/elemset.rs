use std::fmt;

/// A set of ring elements, stored as a bit mask over element indices.
///
/// Rings are limited to 64 elements, far beyond what exhaustive sweeps can
/// handle anyway.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        ElemSet(1u64 << x)
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(items: I) -> Self {
        items.into_iter().fold(ElemSet::EMPTY, |s, x| s.with(x))
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn with(self, x: usize) -> Self {
        ElemSet(self.0 | 1u64 << x)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersection(self, other: ElemSet) -> Self {
        ElemSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: ElemSet) -> Self {
        ElemSet(self.0 | other.0)
    }

    /// Elements in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Order used for deterministic listings: by size, then lexicographic
    /// on the sorted element lists.
    pub fn canonical_cmp(&self, other: &ElemSet) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
