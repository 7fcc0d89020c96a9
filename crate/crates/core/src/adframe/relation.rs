use std::fmt;

use fixedbitset::FixedBitSet;

/// A binary relation between the elements of two finite lattices, stored as
/// a row-major bit matrix indexed by `(omega element, ell element)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: usize,
    cols: usize,
    bits: FixedBitSet,
}

impl Relation {
    pub fn empty(rows: usize, cols: usize) -> Relation {
        Relation { rows, cols, bits: FixedBitSet::with_capacity(rows * cols) }
    }

    pub fn full(rows: usize, cols: usize) -> Relation {
        let mut r = Relation::empty(rows, cols);
        r.bits.insert_range(..);
        r
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Relation {
        let mut r = Relation::empty(rows, cols);
        for u in 0..rows {
            for a in 0..cols {
                if f(u, a) {
                    r.insert(u, a);
                }
            }
        }
        r
    }

    /// Pairs out of range are reported as `Err((u, a))`.
    pub fn from_pairs(rows: usize, cols: usize, pairs: &[(usize, usize)]) -> Result<Relation, (usize, usize)> {
        let mut r = Relation::empty(rows, cols);
        for &(u, a) in pairs {
            if u >= rows || a >= cols {
                return Err((u, a));
            }
            r.insert(u, a);
        }
        Ok(r)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn contains(&self, u: usize, a: usize) -> bool {
        self.bits.contains(u * self.cols + a)
    }

    pub fn insert(&mut self, u: usize, a: usize) {
        self.bits.insert(u * self.cols + a);
    }

    pub fn remove(&mut self, u: usize, a: usize) {
        self.bits.set(u * self.cols + a, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let cols = self.cols;
        self.bits.ones().map(move |i| (i / cols, i % cols))
    }

    pub fn row(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.cols).filter(move |&a| self.contains(u, a))
    }

    pub fn col(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rows).filter(move |&u| self.contains(u, a))
    }

    pub fn intersect(&self, other: &Relation) -> Relation {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Relation { rows: self.rows, cols: self.cols, bits }
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_and_columns() {
        let r = Relation::from_pairs(2, 3, &[(0, 2), (1, 0), (1, 2)]).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.row(1).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(r.col(2).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(r.pairs().collect::<Vec<_>>(), vec![(0, 2), (1, 0), (1, 2)]);
        assert_eq!(Relation::from_pairs(2, 3, &[(2, 0)]), Err((2, 0)));
    }
}
