use crate::error::{Error, Result};
use crate::subset::Subset;

/// A preorder on `{0, .., n-1}`, stored as the principal up-set of every point.
///
/// Row `x` holds every `y` with `x <= y`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Preorder {
    up: Vec<Subset>,
}

impl Preorder {
    /// The equality relation.
    pub fn discrete(n: usize) -> Preorder {
        Preorder { up: (0..n).map(Subset::singleton).collect() }
    }

    /// The total relation: every point below every other.
    pub fn indiscrete(n: usize) -> Preorder {
        Preorder { up: vec![Subset::full(n); n] }
    }

    /// Reflexive-transitive closure of the given pairs.
    pub fn closure_of(n: usize, pairs: &[(usize, usize)]) -> Result<Preorder> {
        let mut up = Preorder::discrete(n).up;
        for &(x, y) in pairs {
            check_index(x, n)?;
            check_index(y, n)?;
            up[x].insert(y);
        }
        // Warshall on bit rows.
        for k in 0..n {
            for x in 0..n {
                if up[x].contains(k) {
                    up[x] = up[x] | up[k];
                }
            }
        }
        Ok(Preorder { up })
    }

    /// Accepts the pairs as-is (plus the diagonal); rejects them if not transitive.
    pub fn strict(n: usize, pairs: &[(usize, usize)]) -> Result<Preorder> {
        let mut up = Preorder::discrete(n).up;
        for &(x, y) in pairs {
            check_index(x, n)?;
            check_index(y, n)?;
            up[x].insert(y);
        }
        let p = Preorder { up };
        if let Some((x, y, z)) = p.transitivity_violation() {
            return Err(Error::NotAPreorder(format!(
                "{x} <= {y} and {y} <= {z} but not {x} <= {z}"
            )));
        }
        Ok(p)
    }

    /// Builds a preorder from explicit up-rows. The rows must already be
    /// reflexive and transitive.
    pub fn from_up_rows(up: Vec<Subset>) -> Result<Preorder> {
        let p = Preorder { up };
        for x in 0..p.len() {
            if !p.up[x].contains(x) {
                return Err(Error::NotAPreorder(format!("{x} is not below itself")));
            }
        }
        if let Some((x, y, z)) = p.transitivity_violation() {
            return Err(Error::NotAPreorder(format!(
                "{x} <= {y} and {y} <= {z} but not {x} <= {z}"
            )));
        }
        Ok(p)
    }

    fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if !self.up[y].is_subset(self.up[x]) {
                    let z = (self.up[y] & !self.up[x]).first().unwrap();
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// Principal up-set of `x`.
    #[inline]
    pub fn up(&self, x: usize) -> Subset {
        self.up[x]
    }

    /// Principal down-set of `x`.
    pub fn down(&self, x: usize) -> Subset {
        Subset::from_points((0..self.len()).filter(|&y| self.up[y].contains(x)))
    }

    pub fn up_rows(&self) -> &[Subset] {
        &self.up
    }

    pub fn up_closure(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, x| acc | self.up[x])
    }

    pub fn down_closure(&self, a: Subset) -> Subset {
        Subset::from_points((0..self.len()).filter(|&y| self.up[y].meets(a)))
    }

    pub fn is_up_closed(&self, a: Subset) -> bool {
        self.up_closure(a) == a
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.len()).all(|x| self.up[x].iter().all(|y| y == x || !self.leq(y, x)))
    }

    /// Pointwise intersection of two preorders on the same carrier.
    pub fn intersect(&self, other: &Preorder) -> Preorder {
        debug_assert_eq!(self.len(), other.len());
        Preorder { up: self.up.iter().zip(&other.up).map(|(&a, &b)| a & b).collect() }
    }

    /// Every pair `(x, y)` with `x <= y` and `x != y`, in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.up[x].iter().filter(move |&y| y != x).map(move |y| (x, y)))
            .collect()
    }

    /// Equivalence class of `x` under `<= ∩ >=`.
    pub fn class_of(&self, x: usize) -> Subset {
        self.up[x] & self.down(x)
    }

    /// Canonical representative (smallest member) of the class of `x`.
    pub fn class_rep(&self, x: usize) -> usize {
        self.class_of(x).first().expect("class contains its own point")
    }

    /// All up-closed subsets, canonically ordered. Fails past `cap` elements.
    pub fn upsets(&self, cap: usize) -> Result<Vec<Subset>> {
        let mut sets = vec![Subset::EMPTY];
        let mut seen: std::collections::HashSet<Subset> = sets.iter().copied().collect();
        for x in 0..self.len() {
            let ux = self.up[x];
            let mut fresh = Vec::new();
            for &a in &sets {
                let b = a | ux;
                if seen.insert(b) {
                    fresh.push(b);
                }
            }
            sets.extend(fresh);
            if sets.len() > cap {
                return Err(Error::LatticeTooLarge { elements: sets.len(), cap });
            }
        }
        sets.sort_by(Subset::canonical_cmp);
        Ok(sets)
    }
}

/// Partition of the carrier into classes of `<= ∩ >=`, ordered by smallest member.
pub fn equivalence_classes(leq: &Preorder) -> Vec<Subset> {
    let mut out: Vec<Subset> = Vec::new();
    let mut covered = Subset::EMPTY;
    for x in 0..leq.len() {
        if !covered.contains(x) {
            let c = leq.class_of(x);
            covered = covered | c;
            out.push(c);
        }
    }
    out
}

fn check_index(x: usize, n: usize) -> Result<()> {
    if x >= n {
        Err(Error::IndexOutOfRange { index: x, size: n })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_adds_transitive_pairs() {
        let p = Preorder::closure_of(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert!(p.is_antisymmetric());
    }

    #[test]
    fn strict_rejects_non_transitive() {
        assert!(matches!(
            Preorder::strict(3, &[(0, 1), (1, 2)]),
            Err(Error::NotAPreorder(_))
        ));
        assert!(Preorder::strict(3, &[(0, 1), (1, 2), (0, 2)]).is_ok());
    }

    #[test]
    fn classes() {
        let eq = Preorder::discrete(3);
        assert_eq!(equivalence_classes(&eq), vec![Subset(1), Subset(2), Subset(4)]);
        let ind = Preorder::indiscrete(2);
        assert_eq!(equivalence_classes(&ind), vec![Subset(0b11)]);
        let chain = Preorder::closure_of(2, &[(0, 1)]).unwrap();
        assert_eq!(equivalence_classes(&chain).len(), 2);
    }

    #[test]
    fn upsets_of_chain() {
        let chain = Preorder::closure_of(2, &[(0, 1)]).unwrap();
        let u = chain.upsets(16).unwrap();
        assert_eq!(u, vec![Subset(0), Subset(0b10), Subset(0b11)]);
    }

    #[test]
    fn out_of_range_pair() {
        assert_eq!(
            Preorder::closure_of(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        );
    }
}
