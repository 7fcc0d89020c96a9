use crate::adframe::{AdFrame, RelKind};
use crate::error::{Error, Result};
use crate::finord::FinPreTopSpace;

/// Default node budget for isomorphism searches.
pub const DEFAULT_ISO_BUDGET: usize = 1_000_000;

/// A bijection `h` of carriers such that `U` is open iff `h[U]` is, and
/// `x <= y` iff `h(x) <= h(y)`.
pub fn pretop_iso(a: &FinPreTopSpace, b: &FinPreTopSpace, budget: usize) -> Result<Option<Vec<usize>>> {
    let n = a.n();
    if n != b.n() || a.opens().len() != b.opens().len() {
        return Ok(None);
    }
    let inv = |s: &FinPreTopSpace, x: usize| {
        let opens = s.opens().iter().filter(|u| u.contains(x)).count();
        (opens, s.up(x).len(), s.down(x).len(), s.preorder().class_of(x).len())
    };
    let ia: Vec<_> = (0..n).map(|x| inv(a, x)).collect();
    let ib: Vec<_> = (0..n).map(|x| inv(b, x)).collect();
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }
    let mut h = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut nodes = 0usize;
    let found = search(a, b, &ia, &ib, 0, &mut h, &mut used, &mut nodes, budget)?;
    Ok(found.then_some(h))
}

#[allow(clippy::too_many_arguments)]
fn search<I: PartialEq>(
    a: &FinPreTopSpace,
    b: &FinPreTopSpace,
    ia: &[I],
    ib: &[I],
    x: usize,
    h: &mut Vec<usize>,
    used: &mut Vec<bool>,
    nodes: &mut usize,
    budget: usize,
) -> Result<bool> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded(format!("space isomorphism search over {budget} nodes")));
    }
    let n = a.n();
    if x == n {
        return Ok(a.opens().iter().all(|&u| b.topology().is_open(u.image(h))));
    }
    for y in 0..n {
        if used[y] || ia[x] != ib[y] {
            continue;
        }
        let consistent = (0..x).all(|z| a.leq(x, z) == b.leq(y, h[z]) && a.leq(z, x) == b.leq(h[z], y));
        if !consistent {
            continue;
        }
        h[x] = y;
        used[y] = true;
        if search(a, b, ia, ib, x + 1, h, used, nodes, budget)? {
            return Ok(true);
        }
        used[y] = false;
    }
    h[x] = usize::MAX;
    Ok(false)
}

/// Lattice isomorphisms `(α, β)` carrying each relation the variant reads
/// onto the corresponding relation, in both directions.
pub fn adframe_iso(a: &AdFrame, b: &AdFrame, budget: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if a.variant() != b.variant() {
        return Ok(None);
    }
    let kinds: &[RelKind] = a.variant().relations();
    if kinds.iter().any(|&k| a.rel(k).len() != b.rel(k).len()) {
        return Ok(None);
    }
    let alphas = a.omega().isos_to(b.omega(), budget)?;
    if alphas.is_empty() {
        return Ok(None);
    }
    let betas = a.ell().isos_to(b.ell(), budget)?;
    for al in &alphas {
        for be in &betas {
            let ok = kinds.iter().all(|&k| a.rel(k).pairs().all(|(u, x)| b.rel(k).contains(al[u], be[x])));
            if ok {
                return Ok(Some((al.clone(), be.clone())));
            }
        }
    }
    Ok(None)
}

/// Why `h : a -> b` fails to be an isomorphism of preordered spaces, if it does.
pub fn iso_map_violation(h: &[usize], a: &FinPreTopSpace, b: &FinPreTopSpace) -> Option<String> {
    if h.len() != a.n() || a.n() != b.n() {
        return Some(format!("{} points against {}", a.n(), b.n()));
    }
    let mut seen = vec![false; b.n()];
    for &y in h {
        if y >= b.n() || std::mem::replace(&mut seen[y], true) {
            return Some(format!("not a bijection: {h:?}"));
        }
    }
    if let Some(v) = a.topology().continuity_violation(h, b.topology()) {
        return Some(format!("preimage of {v:?} is not open"));
    }
    if let Some(u) = a.opens().iter().find(|u| !b.topology().is_open(u.image(h))) {
        return Some(format!("image of {u:?} is not open"));
    }
    for x in 0..a.n() {
        for y in 0..a.n() {
            if a.leq(x, y) != b.leq(h[x], h[y]) {
                return Some(format!("order between {x} and {y} not carried over"));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adframe::{build_ado, ind_frame, Variant};
    use crate::finord::{FinLattice, FinTopSpace, Preorder};
    use crate::subset::Subset;

    #[test]
    fn space_isomorphisms() {
        let s = FinPreTopSpace::sierpinski(Preorder::discrete(2));
        assert_eq!(pretop_iso(&s, &s, 100).unwrap(), Some(vec![0, 1]));
        let swapped = FinPreTopSpace::new(FinTopSpace::new(2, vec![Subset(0b01)], true).unwrap(), Preorder::discrete(2))
            .unwrap();
        assert_eq!(pretop_iso(&s, &swapped, 100).unwrap(), Some(vec![1, 0]));
        let d = FinPreTopSpace::new(FinTopSpace::discrete(2), Preorder::discrete(2)).unwrap();
        assert_eq!(pretop_iso(&s, &d, 100).unwrap(), None);
    }

    #[test]
    fn ado_of_indiscrete_point_matches_ind_of_its_opens() {
        let x = FinPreTopSpace::new(FinTopSpace::discrete(1), Preorder::indiscrete(1)).unwrap();
        let a = build_ado(&x, Variant::Both).unwrap();
        let b = ind_frame(&FinLattice::from_sets(x.opens()).unwrap(), Variant::Both).unwrap();
        assert!(adframe_iso(&a, &b, 1000).unwrap().is_some());
    }
}
