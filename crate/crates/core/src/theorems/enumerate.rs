use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::finord::{FinLattice, FinPreTopSpace, FinTopSpace, Preorder};
use crate::subset::Subset;

/// Largest carrier for exhaustive enumeration of all spaces.
pub const MAX_EXHAUSTIVE_POINTS: usize = 4;

/// Which spaces on `n` labeled points to list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceMode {
    /// Every topology paired with every preorder.
    All,
    /// Every T0 topology paired with every preorder.
    T0,
    /// A fixed topology paired with every preorder.
    FixedTopology(FinTopSpace),
}

/// Every topology on `n` labeled points, by direct search over families of
/// subsets. Ordered by the canonical list of opens.
pub fn all_topologies(n: usize) -> Result<Vec<FinTopSpace>> {
    if n > MAX_EXHAUSTIVE_POINTS {
        return Err(Error::BudgetExceeded(format!("topologies on {n} points")));
    }
    let full = Subset::full(n);
    // proper non-empty subsets are the free choices
    let middle: Vec<Subset> = (1..full.0).map(Subset).collect();
    let k = middle.len();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << k) {
        let mut fam: Vec<Subset> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| middle[i]).collect();
        let set: HashSet<Subset> = fam.iter().copied().collect();
        let closed = fam.iter().all(|&u| {
            fam.iter().all(|&v| {
                let (j, m) = (u | v, u & v);
                (j == full || set.contains(&j)) && (m.is_empty() || set.contains(&m))
            })
        });
        if closed {
            fam.push(Subset::EMPTY);
            if n > 0 {
                fam.push(full);
            }
            out.push(FinTopSpace::new(n, fam, false)?);
        }
    }
    out.sort_by(|a, b| cmp_opens(a.opens(), b.opens()));
    Ok(out)
}

fn cmp_opens(a: &[Subset], b: &[Subset]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.canonical_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    })
}

/// Every preorder on `n` labeled points, by testing every relation for
/// transitivity. Ordered by the up-rows as integers.
pub fn all_preorders(n: usize) -> Result<Vec<Preorder>> {
    if n > MAX_EXHAUSTIVE_POINTS {
        return Err(Error::BudgetExceeded(format!("preorders on {n} points")));
    }
    let off: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << off.len()) {
        let pairs: Vec<(usize, usize)> =
            (0..off.len()).filter(|&i| mask >> i & 1 == 1).map(|i| off[i]).collect();
        if let Ok(p) = Preorder::strict(n, &pairs) {
            out.push(p);
        }
    }
    out.sort_by_key(|p| p.up_rows().iter().map(|s| s.0).collect::<Vec<_>>());
    Ok(out)
}

/// All spaces on `n` labeled points for the given mode, topology-major.
pub fn enumerate_spaces(n: usize, mode: &SpaceMode) -> Result<Vec<FinPreTopSpace>> {
    let preorders = all_preorders(n)?;
    let tops = match mode {
        SpaceMode::All => all_topologies(n)?,
        SpaceMode::T0 => all_topologies(n)?.into_iter().filter(|t| t.is_t0()).collect(),
        SpaceMode::FixedTopology(t) => {
            if t.n() != n {
                return Err(Error::Malformed(format!("topology has {} points, expected {n}", t.n())));
            }
            vec![t.clone()]
        }
    };
    let mut out = Vec::with_capacity(tops.len() * preorders.len());
    for t in &tops {
        for p in &preorders {
            out.push(FinPreTopSpace::new(t.clone(), p.clone())?);
        }
    }
    Ok(out)
}

/// Every distributive lattice with at most `max_size` elements, one per
/// isomorphism class, as the up-set lattices of finite posets.
///
/// Posets are grown one new maximal element at a time (every finite poset
/// arises this way along a linear extension), pruned once the number of
/// up-sets exceeds `max_size`, and deduplicated by a canonical form.
pub fn distributive_lattices(max_size: usize) -> Result<Vec<FinLattice>> {
    if max_size > 16 {
        return Err(Error::BudgetExceeded(format!("distributive lattices up to {max_size} elements")));
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut layer: Vec<Preorder> = vec![Preorder::discrete(0)];
    let mut out = Vec::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for p in layer {
            let ups = p.upsets(max_size)?;
            out.push(FinLattice::from_sets(&ups)?);
            let k = p.len();
            // one more element means at least k + 2 up-sets
            if k + 2 > max_size {
                continue;
            }
            // a new element sits above a down-set of the current poset
            for d in p.upsets(usize::MAX)?.iter().map(|u| u.complement(k)) {
                let mut rows: Vec<Subset> = p.up_rows().to_vec();
                for (x, row) in rows.iter_mut().enumerate() {
                    if d.contains(x) {
                        row.insert(k);
                    }
                }
                rows.push(Subset::singleton(k));
                let q = Preorder::from_up_rows(rows)?;
                if q.upsets(max_size).is_err() {
                    continue;
                }
                if seen.insert(canonical_form(&q)) {
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    out.sort_by_key(|l| l.len());
    Ok(out)
}

/// Lexicographically least up-row encoding over all relabelings.
fn canonical_form(p: &Preorder) -> Vec<u64> {
    let n = p.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    loop {
        let mut rows = vec![0u64; n];
        for x in 0..n {
            for y in p.up(x).iter() {
                rows[perm[x]] |= 1 << perm[y];
            }
        }
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topology_and_preorder_counts_agree() {
        for (n, want) in [(0, 1), (1, 1), (2, 4), (3, 29)] {
            assert_eq!(all_topologies(n).unwrap().len(), want, "topologies on {n}");
            assert_eq!(all_preorders(n).unwrap().len(), want, "preorders on {n}");
        }
    }

    #[test]
    fn space_counts() {
        assert_eq!(enumerate_spaces(1, &SpaceMode::All).unwrap().len(), 1);
        assert_eq!(enumerate_spaces(2, &SpaceMode::All).unwrap().len(), 16);
        assert_eq!(enumerate_spaces(2, &SpaceMode::T0).unwrap().len(), 3 * 4);
        let sierp = FinTopSpace::new(2, vec![Subset(0b10)], true).unwrap();
        assert_eq!(enumerate_spaces(2, &SpaceMode::FixedTopology(sierp)).unwrap().len(), 4);
        assert!(matches!(enumerate_spaces(5, &SpaceMode::All), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn distributive_lattice_counts_by_size() {
        let ls = distributive_lattices(8).unwrap();
        let mut counts = [0usize; 9];
        for l in &ls {
            assert!(l.is_distributive());
            counts[l.len()] += 1;
        }
        assert_eq!(counts, [0, 1, 1, 1, 2, 3, 5, 8, 15]);
    }

    #[test]
    fn permutations() {
        let mut v = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut v) {
            n += 1;
        }
        assert_eq!(n, 6);
    }
}
