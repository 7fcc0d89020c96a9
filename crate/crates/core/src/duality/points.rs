use fixedbitset::FixedBitSet;

use crate::adframe::AdFrame;
use crate::error::{Error, Result};
use crate::finord::FinLattice;

/// A point `(x, s)`: a completely prime filter `x` of `omega` and a
/// completely prime complete filter `s` of `ell`.
///
/// `prime` is the largest element outside `x`; `coprime` the least element of `s`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AdPoint {
    pub x: FixedBitSet,
    pub s: FixedBitSet,
    pub prime: usize,
    pub coprime: usize,
}

impl AdPoint {
    /// The point determined by a prime `p` of `omega` and a coprime `b` of `ell`.
    pub fn from_prime_coprime(f: &AdFrame, p: usize, b: usize) -> AdPoint {
        let (o, l) = (f.omega(), f.ell());
        let mut x = FixedBitSet::with_capacity(o.len());
        x.insert_range(..);
        x.difference_with(o.down_row(p));
        AdPoint { x, s: l.up_row(b).clone(), prime: p, coprime: b }
    }

    fn from_sets(o: &FinLattice, l: &FinLattice, x: FixedBitSet, s: FixedBitSet) -> AdPoint {
        let prime = o.join_all((0..o.len()).filter(|&u| !x.contains(u)));
        let coprime = l.meet_all(s.ones());
        AdPoint { x, s, prime, coprime }
    }

    fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.coprime, self.x.ones().collect())
    }
}

/// How to find the points of an ad-frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointAlgorithm {
    /// Primes of `omega` against coprimes of `ell`, filtered by the
    /// simplified point laws.
    Prime,
    /// Every pair of subsets, tested against the definition. Needs both
    /// lattices to have at most [`BRUTE_FORCE_LIMIT`] elements.
    BruteForce,
}

pub const BRUTE_FORCE_LIMIT: usize = 16;

/// All points, sorted by (least element of `s`, elements of `x`).
pub fn enumerate_points(f: &AdFrame, algorithm: PointAlgorithm) -> Result<Vec<AdPoint>> {
    let mut pts = match algorithm {
        PointAlgorithm::Prime => prime_points(f),
        PointAlgorithm::BruteForce => brute_force_points(f)?,
    };
    pts.sort_by_cached_key(AdPoint::sort_key);
    Ok(pts)
}

fn prime_points(f: &AdFrame) -> Vec<AdPoint> {
    let (o, l) = (f.omega(), f.ell());
    let v = f.variant();
    let primes = o.primes();
    let mut out = Vec::new();
    for b in l.coprimes() {
        // the ideal complementary to ↑b is principal, generated by q
        let q = l.join_all((0..l.len()).filter(|&a| !l.leq(b, a)));
        for &p in &primes {
            let up_ok = !v.has_up()
                || (f.tot().row(p).all(|a| l.leq(b, a)) && f.con().col(b).all(|u| o.leq(u, p)));
            let down_ok = !v.has_down()
                || (f.fof().row(p).all(|a| l.leq(a, q)) && f.cou().col(q).all(|u| o.leq(u, p)));
            if up_ok && down_ok {
                out.push(AdPoint::from_prime_coprime(f, p, b));
            }
        }
    }
    out
}

/// Whether `(x, s)` satisfies the point laws the variant reads.
pub fn satisfies_point_laws(f: &AdFrame, x: &FixedBitSet, s: &FixedBitSet) -> bool {
    let v = f.variant();
    let up = || {
        f.tot().pairs().all(|(u, a)| x.contains(u) || s.contains(a))
            && f.con().pairs().all(|(u, a)| !x.contains(u) || !s.contains(a))
    };
    let down = || {
        f.fof().pairs().all(|(u, a)| x.contains(u) || !s.contains(a))
            && f.cou().pairs().all(|(u, a)| !x.contains(u) || s.contains(a))
    };
    (!v.has_up() || up()) && (!v.has_down() || down())
}

fn brute_force_points(f: &AdFrame) -> Result<Vec<AdPoint>> {
    let (o, l) = (f.omega(), f.ell());
    if o.len() > BRUTE_FORCE_LIMIT || l.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "brute-force point search on lattices of sizes {} and {}",
            o.len(),
            l.len()
        )));
    }
    let xs = subsets_where(o.len(), |m| is_completely_prime_filter(o, m));
    let ss = subsets_where(l.len(), |m| is_completely_prime_filter(l, m));
    let mut out = Vec::new();
    for x in &xs {
        for s in &ss {
            if satisfies_point_laws(f, x, s) {
                out.push(AdPoint::from_sets(o, l, x.clone(), s.clone()));
            }
        }
    }
    Ok(out)
}

fn subsets_where(m: usize, keep: impl Fn(u32) -> bool) -> Vec<FixedBitSet> {
    (0u32..1 << m)
        .filter(|&mask| keep(mask))
        .map(|mask| {
            let mut b = FixedBitSet::with_capacity(m);
            b.extend((0..m).filter(|&i| mask >> i & 1 == 1));
            b
        })
        .collect()
}

/// Filter closed under binary meets containing top, whose complement contains
/// bottom and is closed under binary joins. In a finite lattice this is a
/// completely prime filter, and it is automatically a complete filter.
fn is_completely_prime_filter(l: &FinLattice, mask: u32) -> bool {
    let has = |a: usize| mask >> a & 1 == 1;
    if !has(l.top()) || has(l.bot()) {
        return false;
    }
    let m = l.len();
    for a in 0..m {
        for b in a..m {
            let (j, mt) = (l.join(a, b), l.meet(a, b));
            if has(a) && !has(j) {
                return false;
            }
            if has(a) && has(b) && !has(mt) {
                return false;
            }
            if !has(a) && !has(b) && has(j) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adframe::{build_ado, ind_frame, Relation, Variant};
    use crate::finord::FinPreTopSpace;

    #[test]
    fn terminal_has_one_point() {
        for v in Variant::ALL {
            let f = build_ado(&FinPreTopSpace::terminal(), v).unwrap();
            for alg in [PointAlgorithm::Prime, PointAlgorithm::BruteForce] {
                let pts = enumerate_points(&f, alg).unwrap();
                assert_eq!(pts.len(), 1);
                assert_eq!(pts[0].x.ones().collect::<Vec<_>>(), vec![1]);
                assert_eq!(pts[0].s.ones().collect::<Vec<_>>(), vec![1]);
            }
        }
    }

    #[test]
    fn ind_of_two_has_one_point() {
        let f = ind_frame(&FinLattice::chain(2), Variant::Both).unwrap();
        let pts = enumerate_points(&f, PointAlgorithm::BruteForce).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].x.ones().collect::<Vec<_>>(), vec![1]);
        assert_eq!(pts[0].s.ones().collect::<Vec<_>>(), vec![1]);
        assert_eq!(enumerate_points(&f, PointAlgorithm::Prime).unwrap(), pts);
    }

    #[test]
    fn minimal_relations_on_two_chains() {
        let c = FinLattice::chain(2);
        let only = |ps: &[(usize, usize)]| Relation::from_pairs(2, 2, ps).unwrap();
        // smallest legal sets: ff, tt for tot/con; (bot, bot), (top, top) for fof/cou,
        // plus what upward/downward closure forces
        let tot = only(&[(0, 1), (1, 0), (1, 1)]);
        let con = only(&[(0, 1), (1, 0), (0, 0)]);
        let fof = only(&[(0, 0), (1, 1), (1, 0)]);
        let cou = only(&[(0, 0), (1, 1), (0, 1)]);
        for v in Variant::ALL {
            let f = AdFrame::new(c.clone(), c.clone(), [tot.clone(), con.clone(), fof.clone(), cou.clone()], v)
                .unwrap();
            let a = enumerate_points(&f, PointAlgorithm::Prime).unwrap();
            let b = enumerate_points(&f, PointAlgorithm::BruteForce).unwrap();
            assert_eq!(a, b, "{v}");
        }
    }

    #[test]
    fn brute_force_is_gated() {
        let f = ind_frame(&FinLattice::chain(17), Variant::Up).unwrap();
        assert!(matches!(
            enumerate_points(&f, PointAlgorithm::BruteForce),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
