use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::finord::preorder::Preorder;
use crate::limits;
use crate::subset::Subset;

/// A finite topological space without a preorder.
///
/// Opens are duplicate-free and kept in canonical order (cardinality, then
/// numeric value), so the empty set is first and the full carrier last.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinTopSpace {
    n: usize,
    opens: Vec<Subset>,
}

impl FinTopSpace {
    /// Checks the topology axioms. With `complete`, the family is first closed
    /// under binary unions and intersections.
    pub fn new(n: usize, opens: Vec<Subset>, complete: bool) -> Result<FinTopSpace> {
        let cap = limits::max_points();
        if n > cap {
            return Err(Error::CarrierTooLarge { points: n, cap });
        }
        let full = Subset::full(n);
        for &u in &opens {
            if !u.is_subset(full) {
                let index = (u & !full).first().unwrap();
                return Err(Error::IndexOutOfRange { index, size: n });
            }
        }
        let mut set: HashSet<Subset> = opens.into_iter().collect();
        if complete {
            set.insert(Subset::EMPTY);
            set.insert(full);
            close_under_lattice_ops(&mut set, limits::max_lattice())?;
        } else {
            if !set.contains(&Subset::EMPTY) {
                return Err(Error::NotATopology("empty set is not open".into()));
            }
            if !set.contains(&full) {
                return Err(Error::NotATopology("full carrier is not open".into()));
            }
            for &u in &set {
                for &v in &set {
                    if !set.contains(&(u | v)) {
                        return Err(Error::NotATopology(format!(
                            "union of {u:?} and {v:?} is not open"
                        )));
                    }
                    if !set.contains(&(u & v)) {
                        return Err(Error::NotATopology(format!(
                            "intersection of {u:?} and {v:?} is not open"
                        )));
                    }
                }
            }
        }
        let mut opens: Vec<Subset> = set.into_iter().collect();
        opens.sort_by(Subset::canonical_cmp);
        Ok(FinTopSpace { n, opens })
    }

    pub(crate) fn from_canonical(n: usize, opens: Vec<Subset>) -> FinTopSpace {
        debug_assert!(opens.windows(2).all(|w| w[0].canonical_cmp(&w[1]).is_lt()));
        FinTopSpace { n, opens }
    }

    pub fn discrete(n: usize) -> FinTopSpace {
        let opens = Preorder::discrete(n).upsets(usize::MAX).expect("no cap");
        FinTopSpace { n, opens }
    }

    pub fn indiscrete(n: usize) -> FinTopSpace {
        let mut opens = vec![Subset::EMPTY];
        if n > 0 {
            opens.push(Subset::full(n));
        }
        FinTopSpace { n, opens }
    }

    /// Alexandroff topology: the up-sets of a preorder.
    pub fn alexandroff(leq: &Preorder) -> Result<FinTopSpace> {
        let opens = leq.upsets(limits::max_lattice())?;
        Ok(FinTopSpace { n: leq.len(), opens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn is_open(&self, a: Subset) -> bool {
        self.open_index(a).is_some()
    }

    /// Position of an open set in the canonical order.
    pub fn open_index(&self, a: Subset) -> Option<usize> {
        self.opens.binary_search_by(|u| u.canonical_cmp(&a)).ok()
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.is_open(a.complement(self.n))
    }

    /// Closed sets, as complements of the opens (same order as [`Self::opens`]).
    pub fn closed_sets(&self) -> Vec<Subset> {
        self.opens.iter().map(|u| u.complement(self.n)).collect()
    }

    /// Largest open subset of `a`.
    pub fn interior(&self, a: Subset) -> Subset {
        self.opens.iter().filter(|u| u.is_subset(a)).fold(Subset::EMPTY, |acc, &u| acc | u)
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: Subset) -> Subset {
        self.interior(a.complement(self.n)).complement(self.n)
    }

    /// `x <= y` iff every open containing `x` contains `y`.
    pub fn specialization(&self) -> Preorder {
        let up = (0..self.n)
            .map(|x| {
                self.opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(self.full(), |acc, &u| acc & u)
            })
            .collect();
        Preorder::from_up_rows(up).expect("specialization is a preorder")
    }

    pub fn is_t0(&self) -> bool {
        self.specialization().is_antisymmetric()
    }

    /// Irreducible closed sets, by definition: non-empty closed `C` such that
    /// `C ⊆ C1 ∪ C2` with `C1, C2` closed forces `C ⊆ C1` or `C ⊆ C2`.
    pub fn irreducible_closed_sets(&self) -> Vec<Subset> {
        let closed = self.closed_sets();
        let mut out: Vec<Subset> = closed
            .iter()
            .copied()
            .filter(|c| !c.is_empty())
            .filter(|&c| {
                closed.iter().all(|&c1| {
                    closed.iter().all(|&c2| {
                        !c.is_subset(c1 | c2) || c.is_subset(c1) || c.is_subset(c2)
                    })
                })
            })
            .collect();
        out.sort_by(Subset::canonical_cmp);
        out
    }

    /// Subspace topology on `keep`, with points renumbered in increasing order.
    pub fn subspace(&self, keep: Subset) -> FinTopSpace {
        let index: Vec<usize> = keep.to_vec();
        let restrict = |u: Subset| {
            Subset::from_points(index.iter().enumerate().filter(|(_, &x)| u.contains(x)).map(|(i, _)| i))
        };
        let mut set: Vec<Subset> = self.opens.iter().map(|&u| restrict(u)).collect();
        set.sort_by(Subset::canonical_cmp);
        set.dedup();
        FinTopSpace { n: index.len(), opens: set }
    }

    /// Whether `f` (an index table into `target`) pulls opens back to opens.
    pub fn continuity_violation(&self, f: &[usize], target: &FinTopSpace) -> Option<Subset> {
        target.opens.iter().copied().find(|v| !self.is_open(v.preimage(f)))
    }
}

fn close_under_lattice_ops(set: &mut HashSet<Subset>, cap: usize) -> Result<()> {
    loop {
        let cur: Vec<Subset> = set.iter().copied().collect();
        let mut grew = false;
        for &u in &cur {
            for &v in &cur {
                grew |= set.insert(u | v);
                grew |= set.insert(u & v);
            }
        }
        if set.len() > cap {
            return Err(Error::LatticeTooLarge { elements: set.len(), cap });
        }
        if !grew {
            return Ok(());
        }
    }
}

/// A finite preordered topological space.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinPreTopSpace {
    top: FinTopSpace,
    leq: Preorder,
}

impl FinPreTopSpace {
    pub fn new(top: FinTopSpace, leq: Preorder) -> Result<FinPreTopSpace> {
        if top.n() != leq.len() {
            return Err(Error::Malformed(format!(
                "topology has {} points but preorder has {}",
                top.n(),
                leq.len()
            )));
        }
        Ok(FinPreTopSpace { top, leq })
    }

    /// The one-point space.
    pub fn terminal() -> FinPreTopSpace {
        FinPreTopSpace { top: FinTopSpace::discrete(1), leq: Preorder::discrete(1) }
    }

    pub fn empty() -> FinPreTopSpace {
        FinPreTopSpace { top: FinTopSpace::discrete(0), leq: Preorder::discrete(0) }
    }

    /// Sierpiński space `{0, 1}` with opens `∅, {1}, X`, under the given preorder.
    pub fn sierpinski(leq: Preorder) -> FinPreTopSpace {
        let top = FinTopSpace::from_canonical(2, vec![Subset(0), Subset(0b10), Subset(0b11)]);
        FinPreTopSpace::new(top, leq).expect("two points")
    }

    pub fn n(&self) -> usize {
        self.top.n()
    }

    pub fn topology(&self) -> &FinTopSpace {
        &self.top
    }

    pub fn preorder(&self) -> &Preorder {
        &self.leq
    }

    pub fn opens(&self) -> &[Subset] {
        self.top.opens()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq.leq(x, y)
    }

    /// The lattice of `<=`-up-closed subsets, as canonically ordered labels.
    pub fn upsets(&self) -> Result<Vec<Subset>> {
        self.leq.upsets(limits::max_lattice())
    }

    pub fn set_operator(&self, a: Subset, op: SetOp) -> Subset {
        match op {
            SetOp::Closure => self.top.closure(a),
            SetOp::Interior => self.top.interior(a),
            SetOp::UpClose => self.leq.up_closure(a),
            SetOp::DownClose => self.leq.down_closure(a),
        }
    }

    pub fn closure(&self, a: Subset) -> Subset {
        self.top.closure(a)
    }

    pub fn up(&self, x: usize) -> Subset {
        self.leq.up(x)
    }

    pub fn down(&self, x: usize) -> Subset {
        self.leq.down(x)
    }

    pub fn specialization(&self) -> Preorder {
        self.top.specialization()
    }

    /// Every `↑x` is closed.
    pub fn is_upper_semi_closed(&self) -> bool {
        (0..self.n()).all(|x| self.top.is_closed(self.up(x)))
    }

    /// Every `↓x` is closed.
    pub fn is_lower_semi_closed(&self) -> bool {
        (0..self.n()).all(|x| self.top.is_closed(self.down(x)))
    }

    /// Induced subspace on `keep` (subspace topology, restricted preorder).
    pub fn subspace(&self, keep: Subset) -> FinPreTopSpace {
        let index = keep.to_vec();
        let up = index
            .iter()
            .map(|&x| {
                Subset::from_points(
                    index.iter().enumerate().filter(|(_, &y)| self.leq(x, y)).map(|(i, _)| i),
                )
            })
            .collect();
        FinPreTopSpace {
            top: self.top.subspace(keep),
            leq: Preorder::from_up_rows(up).expect("restriction of a preorder"),
        }
    }

    /// Checks that `f` is a morphism of preordered spaces into `target`.
    pub fn check_morphism(&self, f: &[usize], target: &FinPreTopSpace) -> Result<()> {
        if f.len() != self.n() {
            return Err(Error::NotAPointMap(format!(
                "map has {} entries for {} points",
                f.len(),
                self.n()
            )));
        }
        if let Some(&bad) = f.iter().find(|&&y| y >= target.n()) {
            return Err(Error::IndexOutOfRange { index: bad, size: target.n() });
        }
        if let Some(v) = self.top.continuity_violation(f, &target.top) {
            return Err(Error::NotContinuous { open: v.to_vec() });
        }
        self.monotonicity_violation(f, target).map_or(Ok(()), Err)
    }

    fn monotonicity_violation(&self, f: &[usize], target: &FinPreTopSpace) -> Option<Error> {
        for x in 0..self.n() {
            for y in self.up(x).iter() {
                if !target.leq(f[x], f[y]) {
                    return Some(Error::NotMonotone { x, y, fx: f[x], fy: f[y] });
                }
            }
        }
        None
    }
}

/// Set operators available on a preordered space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetOp {
    Closure,
    Interior,
    UpClose,
    DownClose,
}

/// A space description as supplied by a user, before validation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawSpace {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
    pub leq: Vec<(usize, usize)>,
    /// Close the opens under union and intersection instead of rejecting.
    pub complete: bool,
    /// Reject non-transitive order pairs instead of closing them.
    pub strict: bool,
}

/// Checked constructor for [`FinPreTopSpace`].
pub fn validate_space(raw: &RawSpace) -> Result<FinPreTopSpace> {
    let n = raw.points;
    let cap = limits::max_points();
    if n > cap {
        return Err(Error::CarrierTooLarge { points: n, cap });
    }
    let mut opens = Vec::with_capacity(raw.opens.len());
    for u in &raw.opens {
        if let Some(&bad) = u.iter().find(|&&x| x >= n) {
            return Err(Error::IndexOutOfRange { index: bad, size: n });
        }
        opens.push(Subset::from_points(u.iter().copied()));
    }
    let top = FinTopSpace::new(n, opens, raw.complete)?;
    let leq = if raw.strict {
        Preorder::strict(n, &raw.leq)?
    } else {
        Preorder::closure_of(n, &raw.leq)?
    };
    FinPreTopSpace::new(top, leq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(n: usize, opens: Vec<Vec<usize>>, leq: Vec<(usize, usize)>) -> RawSpace {
        RawSpace { points: n, opens, leq, ..Default::default() }
    }

    #[test]
    fn terminal_and_empty_are_valid() {
        let t = validate_space(&raw(1, vec![vec![], vec![0]], vec![])).unwrap();
        assert_eq!(t, FinPreTopSpace::terminal());
        let e = validate_space(&raw(0, vec![vec![]], vec![])).unwrap();
        assert_eq!(e.n(), 0);
        assert_eq!(e.opens(), &[Subset::EMPTY]);
    }

    #[test]
    fn missing_full_set_is_rejected() {
        let r = validate_space(&raw(2, vec![vec![], vec![1]], vec![]));
        assert!(matches!(r, Err(Error::NotATopology(_))));
    }

    #[test]
    fn complete_flag_closes_family() {
        let mut r = raw(3, vec![vec![0], vec![1]], vec![]);
        assert!(validate_space(&r).is_err());
        r.complete = true;
        let s = validate_space(&r).unwrap();
        assert_eq!(s.opens(), &[Subset(0), Subset(1), Subset(2), Subset(3), Subset(7)]);
    }

    #[test]
    fn subset_out_of_range() {
        let r = validate_space(&raw(2, vec![vec![], vec![0, 1], vec![5]], vec![]));
        assert_eq!(r, Err(Error::IndexOutOfRange { index: 5, size: 2 }));
    }

    #[test]
    fn sierpinski_closure_and_specialization() {
        let s = FinPreTopSpace::sierpinski(Preorder::discrete(2));
        assert_eq!(s.closure(Subset::singleton(1)), Subset(0b11));
        assert_eq!(s.closure(Subset::EMPTY), Subset::EMPTY);
        let sp = s.specialization();
        assert!(sp.leq(0, 1));
        assert!(!sp.leq(1, 0));
    }

    #[test]
    fn specialization_of_discrete_and_indiscrete() {
        let d = FinTopSpace::discrete(2).specialization();
        assert_eq!(d, Preorder::discrete(2));
        let i = FinTopSpace::indiscrete(2).specialization();
        assert_eq!(i, Preorder::indiscrete(2));
    }

    #[test]
    fn upclose_on_chain() {
        let chain = Preorder::closure_of(2, &[(0, 1)]).unwrap();
        let s = FinPreTopSpace::new(FinTopSpace::discrete(2), chain).unwrap();
        assert_eq!(s.set_operator(Subset::singleton(0), SetOp::UpClose), Subset(0b11));
        assert_eq!(s.set_operator(Subset::singleton(1), SetOp::DownClose), Subset(0b11));
    }

    #[test]
    fn irreducible_closed_sets_examples() {
        let s = FinPreTopSpace::sierpinski(Preorder::discrete(2));
        assert_eq!(s.topology().irreducible_closed_sets(), vec![Subset(0b01), Subset(0b11)]);
        let ind = FinTopSpace::indiscrete(2);
        assert_eq!(ind.irreducible_closed_sets(), vec![Subset(0b11)]);
        assert!(FinTopSpace::discrete(0).irreducible_closed_sets().is_empty());
    }

    #[test]
    fn subspace_restricts_both_structures() {
        let chain = Preorder::closure_of(3, &[(0, 1), (1, 2)]).unwrap();
        let s = FinPreTopSpace::new(FinTopSpace::alexandroff(&chain).unwrap(), chain).unwrap();
        let sub = s.subspace(Subset::from_points([0, 2]));
        assert_eq!(sub.n(), 2);
        assert!(sub.leq(0, 1));
        assert_eq!(sub.opens(), &[Subset(0), Subset(0b10), Subset(0b11)]);
    }
}
