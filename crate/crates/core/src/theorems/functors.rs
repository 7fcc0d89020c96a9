use crate::error::{Error, Result};
use crate::finord::{FinLattice, FinPreTopSpace, FinTopSpace, Preorder};
use crate::limits;
use crate::subset::Subset;

/// A topology with the equality preorder.
pub fn discr(t: &FinTopSpace) -> FinPreTopSpace {
    FinPreTopSpace::new(t.clone(), Preorder::discrete(t.n())).expect("same carrier")
}

/// A topology with the total preorder.
pub fn ind_space(t: &FinTopSpace) -> FinPreTopSpace {
    FinPreTopSpace::new(t.clone(), Preorder::indiscrete(t.n())).expect("same carrier")
}

/// The underlying topology.
pub fn underlying(x: &FinPreTopSpace) -> FinTopSpace {
    x.topology().clone()
}

/// Equips `e` with the largest preorder making every `g_i : e -> |Y_i|`
/// monotone: `x <= x'` iff `g_i(x) <= g_i(x')` for all `i`.
pub fn lifted_preorder(e: &FinTopSpace, targets: &[(Vec<usize>, FinPreTopSpace)]) -> Result<FinPreTopSpace> {
    for (g, y) in targets {
        if g.len() != e.n() {
            return Err(Error::NotAPointMap(format!("map has {} entries for {} points", g.len(), e.n())));
        }
        if let Some(&bad) = g.iter().find(|&&v| v >= y.n()) {
            return Err(Error::IndexOutOfRange { index: bad, size: y.n() });
        }
        if let Some(v) = e.continuity_violation(g, y.topology()) {
            return Err(Error::NotContinuous { open: v.to_vec() });
        }
    }
    let n = e.n();
    let up = (0..n)
        .map(|x| Subset::from_points((0..n).filter(|&z| targets.iter().all(|(g, y)| y.leq(g[x], g[z])))))
        .collect();
    FinPreTopSpace::new(e.clone(), Preorder::from_up_rows(up)?)
}

/// The points of a frame, `pt Ω`: one per prime `p`, with opens
/// `{p | u ≰ p}`. Returns the space and the primes in carrier order.
pub fn frame_points(omega: &FinLattice) -> Result<(FinTopSpace, Vec<usize>)> {
    let primes = omega.primes();
    let cap = limits::max_points();
    if primes.len() > cap {
        return Err(Error::CarrierTooLarge { points: primes.len(), cap });
    }
    let opens = (0..omega.len())
        .map(|u| Subset::from_points((0..primes.len()).filter(|&i| !omega.leq(u, primes[i]))))
        .collect();
    let space = FinTopSpace::new(primes.len(), opens, false)
        .map_err(|e| Error::Internal(format!("frame points: {e}")))?;
    Ok((space, primes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::enumerate::all_preorders;

    #[test]
    fn basic_functors_round_trip() {
        let s = FinTopSpace::new(2, vec![Subset(0b10)], true).unwrap();
        assert_eq!(underlying(&discr(&s)), s);
        let one = FinTopSpace::discrete(1);
        assert_eq!(ind_space(&one), discr(&one));
    }

    #[test]
    fn lift_along_nothing_is_indiscrete() {
        let e = FinTopSpace::discrete(3);
        assert_eq!(lifted_preorder(&e, &[]).unwrap().preorder(), &Preorder::indiscrete(3));
    }

    #[test]
    fn lift_along_identity_recovers_preorder() {
        let chain = Preorder::closure_of(2, &[(0, 1)]).unwrap();
        let y = FinPreTopSpace::new(FinTopSpace::discrete(2), chain.clone()).unwrap();
        let lifted = lifted_preorder(&FinTopSpace::discrete(2), &[(vec![0, 1], y)]).unwrap();
        assert_eq!(lifted.preorder(), &chain);
    }

    #[test]
    fn lift_is_the_largest_monotone_preorder() {
        let e = FinTopSpace::discrete(3);
        let y1 = FinPreTopSpace::new(FinTopSpace::discrete(2), Preorder::closure_of(2, &[(0, 1)]).unwrap()).unwrap();
        let y2 = FinPreTopSpace::new(FinTopSpace::discrete(2), Preorder::closure_of(2, &[(1, 0)]).unwrap()).unwrap();
        let targets = vec![(vec![0, 1, 1], y1), (vec![0, 0, 1], y2)];
        let lifted = lifted_preorder(&e, &targets).unwrap();
        let monotone = |p: &Preorder| {
            targets.iter().all(|(g, y)| (0..3).all(|a| p.up(a).iter().all(|b| y.leq(g[a], g[b]))))
        };
        let best: Vec<Preorder> = all_preorders(3)
            .unwrap()
            .into_iter()
            .filter(|p| monotone(p))
            .filter(|p| (0..3).all(|a| p.up(a).is_subset(lifted.preorder().up(a))))
            .collect();
        assert!(monotone(lifted.preorder()));
        // every monotone preorder sits inside the lift
        let all_monotone = all_preorders(3).unwrap().into_iter().filter(|p| monotone(p)).count();
        assert_eq!(best.len(), all_monotone);
    }

    #[test]
    fn points_of_opens_of_sierpinski() {
        let s = FinTopSpace::new(2, vec![Subset(0b10)], true).unwrap();
        let omega = FinLattice::from_sets(s.opens()).unwrap();
        let (pts, primes) = frame_points(&omega).unwrap();
        assert_eq!(pts.n(), 2);
        assert_eq!(primes.len(), 2);
        let ind = FinLattice::from_sets(FinTopSpace::indiscrete(2).opens()).unwrap();
        assert_eq!(frame_points(&ind).unwrap().0.n(), 1);
    }
}
