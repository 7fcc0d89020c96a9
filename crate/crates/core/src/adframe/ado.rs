use std::sync::Arc;

use super::{AdFrame, AdFrameHom, Relation, Variant};
use crate::error::{Error, Result};
use crate::finord::{subset_lattice, FinPreTopSpace, LatticeKind};

/// `adO X`: the opens, the up-sets, and the four set-theoretic relations
/// `U ∪ A = X`, `U ∩ A = ∅`, `U ⊇ A`, `U ⊆ A`.
pub fn build_ado(space: &FinPreTopSpace, variant: Variant) -> Result<AdFrame> {
    let omega = subset_lattice(space, LatticeKind::Opens)?;
    let ell = subset_lattice(space, LatticeKind::Upsets)?;
    let full = space.topology().full();
    let (ou, la) = (omega.labels().unwrap(), ell.labels().unwrap());
    let (m, l) = (omega.len(), ell.len());
    let tot = Relation::from_fn(m, l, |u, a| ou[u] | la[a] == full);
    let con = Relation::from_fn(m, l, |u, a| !ou[u].meets(la[a]));
    let fof = Relation::from_fn(m, l, |u, a| la[a].is_subset(ou[u]));
    let cou = Relation::from_fn(m, l, |u, a| ou[u].is_subset(la[a]));
    AdFrame::new(omega, ell, [tot, con, fof, cou], variant)
}

/// `adO f = (f⁻¹, f⁻¹) : adO Y -> adO X` for a continuous monotone `f: X -> Y`.
pub fn build_ado_hom(
    f: &[usize],
    x: &FinPreTopSpace,
    y: &FinPreTopSpace,
    variant: Variant,
) -> Result<AdFrameHom> {
    x.check_morphism(f, y)?;
    let ado_x = Arc::new(build_ado(x, variant)?);
    let ado_y = Arc::new(build_ado(y, variant)?);
    ado_hom_between(f, ado_y, ado_x)
}

/// Preimage map between already built `adO Y` (source) and `adO X` (target).
/// Both frames must carry subset labels.
pub fn ado_hom_between(f: &[usize], ado_y: Arc<AdFrame>, ado_x: Arc<AdFrame>) -> Result<AdFrameHom> {
    let pull = |src: &crate::finord::FinLattice, dst: &crate::finord::FinLattice, what: &str| {
        let labels = src
            .labels()
            .ok_or_else(|| Error::Malformed(format!("{what} of the codomain has no subset labels")))?;
        labels
            .iter()
            .map(|s| {
                let pre = s.preimage(f);
                dst.index_of(pre).ok_or_else(|| match what {
                    "opens" => Error::NotContinuous { open: s.to_vec() },
                    _ => Error::NotAPointMap(format!("preimage of up-set {s:?} is not up-closed")),
                })
            })
            .collect::<Result<Vec<usize>>>()
    };
    let phi = pull(ado_y.omega(), ado_x.omega(), "opens")?;
    let p = pull(ado_y.ell(), ado_x.ell(), "up-sets")?;
    Ok(AdFrameHom::new(ado_y, ado_x, phi, p))
}
