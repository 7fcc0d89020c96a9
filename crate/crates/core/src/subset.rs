//! Fixed-width subsets of a carrier of at most 64 points.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

/// Maximum carrier size representable by a [`Subset`].
pub const MAX_CARRIER: usize = 64;

/// A subset of `{0, .., 63}` stored as a bit vector.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full carrier `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_CARRIER);
        if n == MAX_CARRIER {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Subset {
        Subset(1u64 << x)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Subset {
        points.into_iter().fold(Subset::EMPTY, |acc, x| acc | Subset::singleton(x))
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
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
    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement relative to a carrier of `n` points.
    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0) & Subset::full(n)
    }

    pub fn iter(self) -> Points {
        Points(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Canonical order: cardinality first, then numeric value.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        (self.len(), self.0).cmp(&(other.len(), other.0))
    }

    /// Preimage of this subset under a point map given as an index table.
    pub fn preimage(self, map: &[usize]) -> Subset {
        Subset::from_points((0..map.len()).filter(|&x| self.contains(map[x])))
    }

    /// Image of this subset under a point map given as an index table.
    pub fn image(self, map: &[usize]) -> Subset {
        Subset::from_points(self.iter().map(|x| map[x]))
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the members of a [`Subset`], in increasing order.
pub struct Points(u64);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}
