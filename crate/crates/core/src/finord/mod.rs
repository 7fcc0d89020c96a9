//! Finite spaces, preorders and lattices.

mod lattice;
mod preorder;
mod space;

pub use lattice::{FinLattice, LatticeAnalysis};
pub use preorder::{equivalence_classes, Preorder};
pub use space::{validate_space, FinPreTopSpace, FinTopSpace, RawSpace, SetOp};

use crate::error::Result;

/// Which family of subsets of a space to turn into a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeKind {
    Opens,
    Upsets,
}

/// The frame of opens or the lattice of up-sets of a space, labeled by subsets.
pub fn subset_lattice(space: &FinPreTopSpace, kind: LatticeKind) -> Result<FinLattice> {
    match kind {
        LatticeKind::Opens => FinLattice::from_sets(space.opens()),
        LatticeKind::Upsets => FinLattice::from_sets(&space.upsets()?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Subset;

    #[test]
    fn upsets_of_small_spaces() {
        let term = FinPreTopSpace::terminal();
        let l = subset_lattice(&term, LatticeKind::Upsets).unwrap();
        assert_eq!(l.labels().unwrap(), &[Subset(0), Subset(1)]);

        let discr = FinPreTopSpace::new(FinTopSpace::discrete(2), Preorder::discrete(2)).unwrap();
        assert_eq!(subset_lattice(&discr, LatticeKind::Upsets).unwrap().len(), 4);

        let chain = Preorder::closure_of(2, &[(0, 1)]).unwrap();
        let s = FinPreTopSpace::new(FinTopSpace::discrete(2), chain).unwrap();
        let l = subset_lattice(&s, LatticeKind::Upsets).unwrap();
        assert_eq!(l.labels().unwrap(), &[Subset(0), Subset(0b10), Subset(0b11)]);
        assert_eq!(l, FinLattice::chain(3).with_labels(l.labels().unwrap().to_vec()).unwrap());
    }

    #[test]
    fn opens_of_sierpinski() {
        let s = FinPreTopSpace::sierpinski(Preorder::discrete(2));
        let l = subset_lattice(&s, LatticeKind::Opens).unwrap();
        assert_eq!(l.len(), 3);
        assert!(l.analyze().distributive);
    }
}
