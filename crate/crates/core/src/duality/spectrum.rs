use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::points::{enumerate_points, AdPoint, PointAlgorithm};
use crate::adframe::{build_ado, AdFrame, AdFrameHom, Variant};
use crate::error::{Error, Result};
use crate::finord::{FinPreTopSpace, FinTopSpace, Preorder};
use crate::limits;
use crate::subset::Subset;

/// `adpt` of an ad-frame: its points as a preordered space, with the maps
/// `u ↦ O_u` and `a ↦ A_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub space: FinPreTopSpace,
    pub points: Vec<AdPoint>,
    /// `open_map[u]` is `O_u`, the points whose `x` contains `u`.
    pub open_map: Vec<Subset>,
    /// `upset_map[a]` is `A_a`, the points whose `s` contains `a`.
    pub upset_map: Vec<Subset>,
    index: HashMap<(FixedBitSet, FixedBitSet), usize>,
}

impl Spectrum {
    /// Position of the point `(x, s)`, if it is one.
    pub fn find(&self, x: &FixedBitSet, s: &FixedBitSet) -> Option<usize> {
        self.index.get(&(x.clone(), s.clone())).copied()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn adpt_space(f: &AdFrame) -> Result<Spectrum> {
    let points = enumerate_points(f, PointAlgorithm::Prime)?;
    spectrum_from_points(f, points)
}

pub(crate) fn spectrum_from_points(f: &AdFrame, points: Vec<AdPoint>) -> Result<Spectrum> {
    let cap = limits::max_points();
    if points.len() > cap {
        return Err(Error::CarrierTooLarge { points: points.len(), cap });
    }
    let n = points.len();
    let open_map: Vec<Subset> = (0..f.omega().len())
        .map(|u| Subset::from_points((0..n).filter(|&i| points[i].x.contains(u))))
        .collect();
    let upset_map: Vec<Subset> = (0..f.ell().len())
        .map(|a| Subset::from_points((0..n).filter(|&i| points[i].s.contains(a))))
        .collect();
    let top = FinTopSpace::new(n, open_map.clone(), false)
        .map_err(|e| Error::Internal(format!("spectrum opens: {e}")))?;
    let up = (0..n)
        .map(|i| Subset::from_points((0..n).filter(|&j| points[i].s.is_subset(&points[j].s))))
        .collect();
    let leq = Preorder::from_up_rows(up)?;
    let space = FinPreTopSpace::new(top, leq)?;
    let index = points.iter().enumerate().map(|(i, p)| ((p.x.clone(), p.s.clone()), i)).collect();
    Ok(Spectrum { space, points, open_map, upset_map, index })
}

/// `adpt h : adpt(target) -> adpt(source)`, `(x, s) ↦ (φ⁻¹x, p⁻¹s)`, as an
/// index table over the two given spectra.
pub fn adpt_hom(h: &AdFrameHom, source_spec: &Spectrum, target_spec: &Spectrum) -> Result<Vec<usize>> {
    let (so, sl) = (h.source().omega().len(), h.source().ell().len());
    target_spec
        .points
        .iter()
        .map(|pt| {
            let mut x = FixedBitSet::with_capacity(so);
            x.extend((0..so).filter(|&u| pt.x.contains(h.phi()[u])));
            let mut s = FixedBitSet::with_capacity(sl);
            s.extend((0..sl).filter(|&a| pt.s.contains(h.p()[a])));
            source_spec
                .find(&x, &s)
                .ok_or_else(|| Error::Internal("preimage of a point is not a point".into()))
        })
        .collect()
}

/// `η_X : X -> adpt(adO X)`, `x ↦ (N_x, U_x)`, together with the spectrum.
pub fn eta_map(space: &FinPreTopSpace, variant: Variant) -> Result<(AdFrame, Spectrum, Vec<usize>)> {
    let f = build_ado(space, variant)?;
    let spec = adpt_space(&f)?;
    let eta = eta_into(space, &f, &spec)?;
    Ok((f, spec, eta))
}

/// `η_X` into an already computed spectrum of `adO X`.
pub fn eta_into(space: &FinPreTopSpace, ado: &AdFrame, spec: &Spectrum) -> Result<Vec<usize>> {
    let (o, l) = (ado.omega(), ado.ell());
    let (ol, ll) = (o.labels().unwrap(), l.labels().unwrap());
    (0..space.n())
        .map(|x| {
            let mut nx = FixedBitSet::with_capacity(o.len());
            nx.extend((0..o.len()).filter(|&u| ol[u].contains(x)));
            let mut ux = FixedBitSet::with_capacity(l.len());
            ux.extend((0..l.len()).filter(|&a| ll[a].contains(x)));
            spec.find(&nx, &ux)
                .ok_or_else(|| Error::Internal(format!("(N_x, U_x) for x = {x} is not a point")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adframe::{epsilon_hom, AdFrameHom};
    use crate::finord::FinTopSpace;
    use std::sync::Arc;

    #[test]
    fn spectrum_of_terminal() {
        let f = build_ado(&FinPreTopSpace::terminal(), Variant::Both).unwrap();
        let s = adpt_space(&f).unwrap();
        assert_eq!(s.space, FinPreTopSpace::terminal());
        assert_eq!(s.open_map, vec![Subset(0), Subset(1)]);
    }

    #[test]
    fn frame_without_points_has_empty_spectrum() {
        let f = build_ado(&FinPreTopSpace::empty(), Variant::Both).unwrap();
        let s = adpt_space(&f).unwrap();
        assert_eq!(s.space.n(), 0);
        assert_eq!(s.space.opens(), &[Subset::EMPTY]);
    }

    #[test]
    fn sierpinski_with_discrete_order_is_recovered() {
        let x = FinPreTopSpace::sierpinski(Preorder::discrete(2));
        let (_, spec, eta) = eta_map(&x, Variant::Both).unwrap();
        assert_eq!(spec.len(), 2);
        let mut sorted = eta.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1]);
        for u in x.opens() {
            let image = u.image(&eta);
            assert!(spec.space.topology().is_open(image));
        }
    }

    #[test]
    fn eta_on_indiscrete_pair_merges_points() {
        let x = FinPreTopSpace::new(FinTopSpace::indiscrete(2), Preorder::indiscrete(2)).unwrap();
        let (_, spec, eta) = eta_map(&x, Variant::Both).unwrap();
        assert_eq!(spec.len(), 1);
        assert_eq!(eta, vec![0, 0]);
    }

    #[test]
    fn identity_and_epsilon_act_as_expected() {
        let f = Arc::new(build_ado(&FinPreTopSpace::terminal(), Variant::Both).unwrap());
        let spec = adpt_space(&f).unwrap();
        let id = AdFrameHom::identity(f.clone());
        assert_eq!(adpt_hom(&id, &spec, &spec).unwrap(), vec![0]);
        let e = epsilon_hom(f).unwrap();
        let src = adpt_space(e.source()).unwrap();
        assert_eq!(adpt_hom(&e, &src, &spec).unwrap(), vec![0]);
    }
}
