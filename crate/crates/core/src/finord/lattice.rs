use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::limits;
use crate::subset::Subset;

/// A finite bounded lattice with precomputed order rows and join/meet tables.
///
/// Concrete lattices (opens, up-sets) carry their elements as subset labels,
/// ordered canonically; abstract ones are given by an order relation.
#[derive(Clone)]
pub struct FinLattice {
    m: usize,
    labels: Option<Vec<Subset>>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    join: Vec<u16>,
    meet: Vec<u16>,
    bot: usize,
    top: usize,
    label_index: HashMap<Subset, usize>,
}

impl PartialEq for FinLattice {
    fn eq(&self, other: &FinLattice) -> bool {
        self.m == other.m && self.labels == other.labels && self.up == other.up
    }
}

impl Eq for FinLattice {}

impl fmt::Debug for FinLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("FinLattice");
        d.field("size", &self.m);
        if let Some(l) = &self.labels {
            d.field("labels", l);
        } else {
            d.field("covers", &self.covers());
        }
        d.finish()
    }
}

fn element_cap() -> usize {
    limits::max_lattice().min(u16::MAX as usize)
}

impl FinLattice {
    /// Concrete lattice of subsets. The family must be closed under union and
    /// intersection (it need not contain the empty set or the full carrier).
    pub fn from_sets(sets: &[Subset]) -> Result<FinLattice> {
        let mut labels: Vec<Subset> = sets.to_vec();
        labels.sort_by(Subset::canonical_cmp);
        labels.dedup();
        if labels.is_empty() {
            return Err(Error::NotALattice("no elements".into()));
        }
        let cap = element_cap();
        if labels.len() > cap {
            return Err(Error::LatticeTooLarge { elements: labels.len(), cap });
        }
        let m = labels.len();
        let label_index: HashMap<Subset, usize> =
            labels.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut join = vec![0u16; m * m];
        let mut meet = vec![0u16; m * m];
        for i in 0..m {
            for j in i..m {
                let (a, b) = (labels[i], labels[j]);
                let u = *label_index.get(&(a | b)).ok_or_else(|| {
                    Error::NotALattice(format!("union of {a:?} and {b:?} missing"))
                })?;
                let v = *label_index.get(&(a & b)).ok_or_else(|| {
                    Error::NotALattice(format!("intersection of {a:?} and {b:?} missing"))
                })?;
                join[i * m + j] = u as u16;
                join[j * m + i] = u as u16;
                meet[i * m + j] = v as u16;
                meet[j * m + i] = v as u16;
            }
        }
        let mut up = vec![FixedBitSet::with_capacity(m); m];
        let mut down = vec![FixedBitSet::with_capacity(m); m];
        for i in 0..m {
            for j in 0..m {
                if labels[i].is_subset(labels[j]) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        // Canonical order puts the smallest set first and the largest last.
        Ok(FinLattice { m, labels: Some(labels), up, down, join, meet, bot: 0, top: m - 1, label_index })
    }

    /// Abstract lattice from order pairs on `{0, .., size-1}`; the
    /// reflexive-transitive closure is taken, antisymmetry and the existence
    /// of all binary bounds are checked.
    pub fn from_order(size: usize, pairs: &[(usize, usize)]) -> Result<FinLattice> {
        if size == 0 {
            return Err(Error::NotALattice("no elements".into()));
        }
        let cap = element_cap();
        if size > cap {
            return Err(Error::LatticeTooLarge { elements: size, cap });
        }
        let mut up = vec![FixedBitSet::with_capacity(size); size];
        for (i, row) in up.iter_mut().enumerate() {
            row.insert(i);
        }
        for &(i, j) in pairs {
            for k in [i, j] {
                if k >= size {
                    return Err(Error::IndexOutOfRange { index: k, size });
                }
            }
            up[i].insert(j);
        }
        for k in 0..size {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(size); size];
        for i in 0..size {
            for j in up[i].ones() {
                if i != j && up[j].contains(i) {
                    return Err(Error::NotALattice(format!("{i} and {j} are distinct but equivalent")));
                }
                down[j].insert(i);
            }
        }
        let mut join = vec![0u16; size * size];
        let mut meet = vec![0u16; size * size];
        for i in 0..size {
            for j in i..size {
                let mut ub = up[i].clone();
                ub.intersect_with(&up[j]);
                let lub = ub.ones().find(|&c| ub.is_subset(&up[c])).ok_or_else(|| {
                    Error::NotALattice(format!("{i} and {j} have no least upper bound"))
                })?;
                let mut lb = down[i].clone();
                lb.intersect_with(&down[j]);
                let glb = lb.ones().find(|&c| lb.is_subset(&down[c])).ok_or_else(|| {
                    Error::NotALattice(format!("{i} and {j} have no greatest lower bound"))
                })?;
                join[i * size + j] = lub as u16;
                join[j * size + i] = lub as u16;
                meet[i * size + j] = glb as u16;
                meet[j * size + i] = glb as u16;
            }
        }
        let bot = (0..size).fold(0, |acc, i| meet[acc * size + i] as usize);
        let top = (0..size).fold(0, |acc, i| join[acc * size + i] as usize);
        Ok(FinLattice { m: size, labels: None, up, down, join, meet, bot, top, label_index: HashMap::new() })
    }

    /// The chain `0 < 1 < .. < k-1`.
    pub fn chain(k: usize) -> FinLattice {
        let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        FinLattice::from_order(k, &pairs).expect("chains are lattices")
    }

    /// Attaches subset labels to an abstract lattice; labels must realize the order.
    pub fn with_labels(mut self, labels: Vec<Subset>) -> Result<FinLattice> {
        if labels.len() != self.m {
            return Err(Error::Malformed(format!(
                "{} labels for {} elements",
                labels.len(),
                self.m
            )));
        }
        for i in 0..self.m {
            for j in 0..self.m {
                if labels[i].is_subset(labels[j]) != self.leq(i, j) {
                    return Err(Error::Malformed(format!(
                        "labels of {i} and {j} disagree with the order"
                    )));
                }
            }
        }
        self.label_index = labels.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.bot == self.top
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.m + b] as usize
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.m + b] as usize
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.bot, |acc, a| self.join(acc, a))
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.top, |acc, a| self.meet(acc, a))
    }

    /// Elements above `a`.
    pub fn up_row(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    /// Elements below `a`.
    pub fn down_row(&self, a: usize) -> &FixedBitSet {
        &self.down[a]
    }

    pub fn labels(&self) -> Option<&[Subset]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> Option<Subset> {
        self.labels.as_ref().map(|l| l[a])
    }

    /// Element carrying a given label.
    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.label_index.get(&s).copied()
    }

    /// Every pair `(a, b)` with `a <= b`, in lexicographic order.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.m).flat_map(|a| self.up[a].ones().map(move |b| (a, b))).collect()
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.m {
            for b in self.up[a].ones().filter(|&b| b != a) {
                let mut between = self.up[a].clone();
                between.intersect_with(&self.down[b]);
                if between.count_ones(..) == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The same lattice with the order reversed.
    pub fn dual(&self) -> FinLattice {
        let pairs: Vec<(usize, usize)> = self.order_pairs().into_iter().map(|(a, b)| (b, a)).collect();
        FinLattice::from_order(self.m, &pairs).expect("dual of a lattice")
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_violation().is_none()
    }

    /// A triple with `a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_violation(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.m {
            for b in 0..self.m {
                for c in b + 1..self.m {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// `q != top` and `u ∧ v <= q` implies `u <= q` or `v <= q`.
    pub fn is_prime(&self, q: usize) -> bool {
        if q == self.top {
            return false;
        }
        let outside: Vec<usize> = (0..self.m).filter(|&u| !self.leq(u, q)).collect();
        outside
            .iter()
            .all(|&u| outside.iter().all(|&v| !self.leq(self.meet(u, v), q)))
    }

    /// `b != bot` and `b <= u ∨ v` implies `b <= u` or `b <= v`.
    pub fn is_coprime(&self, b: usize) -> bool {
        if b == self.bot {
            return false;
        }
        let outside: Vec<usize> = (0..self.m).filter(|&u| !self.leq(b, u)).collect();
        outside
            .iter()
            .all(|&u| outside.iter().all(|&v| !self.leq(b, self.join(u, v))))
    }

    pub fn primes(&self) -> Vec<usize> {
        (0..self.m).filter(|&q| self.is_prime(q)).collect()
    }

    pub fn coprimes(&self) -> Vec<usize> {
        (0..self.m).filter(|&b| self.is_coprime(b)).collect()
    }

    /// Whether `q ⋔ b`: for every `a`, `b <= a` iff `a ≰ q`.
    pub fn is_pitchfork(&self, q: usize, b: usize) -> bool {
        (0..self.m).all(|a| self.leq(b, a) != self.leq(a, q))
    }

    /// Every pitchfork pair `(q, b)`. The only candidate partner of `q` is the
    /// meet of the elements not below `q`, so one test per `q` suffices.
    pub fn pitchfork_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.m)
            .filter_map(|q| {
                let b = self.meet_all((0..self.m).filter(|&a| !self.leq(a, q)));
                self.is_pitchfork(q, b).then_some((q, b))
            })
            .collect()
    }

    pub fn analyze(&self) -> LatticeAnalysis {
        LatticeAnalysis {
            distributive: self.is_distributive(),
            primes: self.primes(),
            coprimes: self.coprimes(),
            pitchfork: self.pitchfork_pairs(),
        }
    }

    /// Describes the first law a map `h: self -> target` breaks, if any:
    /// preservation of bottom, top, binary joins and binary meets.
    pub fn hom_violation(&self, h: &[usize], target: &FinLattice) -> Option<String> {
        if h.len() != self.m {
            return Some(format!("map has {} entries for {} elements", h.len(), self.m));
        }
        if let Some(&bad) = h.iter().find(|&&y| y >= target.m) {
            return Some(format!("image {bad} out of range"));
        }
        if h[self.bot] != target.bot {
            return Some("bottom not preserved".into());
        }
        if h[self.top] != target.top {
            return Some("top not preserved".into());
        }
        for a in 0..self.m {
            for b in a + 1..self.m {
                if h[self.join(a, b)] != target.join(h[a], h[b]) {
                    return Some(format!("join of {a} and {b} not preserved"));
                }
                if h[self.meet(a, b)] != target.meet(h[a], h[b]) {
                    return Some(format!("meet of {a} and {b} not preserved"));
                }
            }
        }
        None
    }

    pub fn is_hom(&self, h: &[usize], target: &FinLattice) -> bool {
        self.hom_violation(h, target).is_none()
    }

    /// A linear extension of the order (every element after all those below it).
    fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.m).collect();
        order.sort_by_key(|&a| (self.down[a].count_ones(..), a));
        order
    }

    /// Every bounded lattice homomorphism into `target`, by backtracking.
    /// Fails once more than `budget` search nodes have been visited.
    pub fn homs_to(&self, target: &FinLattice, budget: usize) -> Result<Vec<Vec<usize>>> {
        self.search_maps(target, budget, false)
    }

    /// Every lattice isomorphism onto `target`.
    pub fn isos_to(&self, target: &FinLattice, budget: usize) -> Result<Vec<Vec<usize>>> {
        if self.m != target.m {
            return Ok(Vec::new());
        }
        self.search_maps(target, budget, true)
    }

    fn search_maps(&self, target: &FinLattice, budget: usize, bijective: bool) -> Result<Vec<Vec<usize>>> {
        let order = self.linear_extension();
        let mut h = vec![usize::MAX; self.m];
        let mut used = FixedBitSet::with_capacity(target.m);
        let mut out = Vec::new();
        let mut nodes = 0usize;
        self.extend_map(target, &order, 0, &mut h, &mut used, bijective, &mut out, &mut nodes, budget)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_map(
        &self,
        target: &FinLattice,
        order: &[usize],
        depth: usize,
        h: &mut Vec<usize>,
        used: &mut FixedBitSet,
        bijective: bool,
        out: &mut Vec<Vec<usize>>,
        nodes: &mut usize,
        budget: usize,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExceeded(format!("lattice map search over {budget} nodes")));
        }
        if depth == order.len() {
            out.push(h.clone());
            return Ok(());
        }
        let a = order[depth];
        let candidates: Vec<usize> = if a == self.bot {
            vec![target.bot]
        } else if a == self.top {
            vec![target.top]
        } else {
            (0..target.m).collect()
        };
        'cand: for y in candidates {
            if bijective && used.contains(y) {
                continue;
            }
            h[a] = y;
            for &b in &order[..depth] {
                let hb = h[b];
                let ab = (self.leq(a, b), self.leq(b, a));
                if (ab.0 && !target.leq(y, hb)) || (ab.1 && !target.leq(hb, y)) {
                    continue 'cand;
                }
                if bijective && (target.leq(y, hb) != ab.0 || target.leq(hb, y) != ab.1) {
                    continue 'cand;
                }
                let (j, mt) = (self.join(a, b), self.meet(a, b));
                if h[j] != usize::MAX && h[j] != target.join(y, hb) {
                    continue 'cand;
                }
                if h[mt] != usize::MAX && h[mt] != target.meet(y, hb) {
                    continue 'cand;
                }
            }
            // Joins and meets landing on `a` itself.
            for &b in &order[..depth] {
                for &c in &order[..depth] {
                    if self.join(b, c) == a && target.join(h[b], h[c]) != y {
                        continue 'cand;
                    }
                    if self.meet(b, c) == a && target.meet(h[b], h[c]) != y {
                        continue 'cand;
                    }
                }
            }
            used.insert(y);
            self.extend_map(target, order, depth + 1, h, used, bijective, out, nodes, budget)?;
            used.set(y, false);
        }
        h[a] = usize::MAX;
        Ok(())
    }
}

/// Primes, coprimes and pitchfork pairs of a finite lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeAnalysis {
    pub distributive: bool,
    pub primes: Vec<usize>,
    pub coprimes: Vec<usize>,
    pub pitchfork: Vec<(usize, usize)>,
}
