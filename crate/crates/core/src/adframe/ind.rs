use std::sync::Arc;

use super::{AdFrame, AdFrameHom, Relation, Variant};
use crate::error::{Error, Result};
use crate::finord::FinLattice;

/// `Ind(Ω)`: `Ω` paired with the chain `0 < 1`, with
/// tot: `u = top or a = 1`, con: `u = bot or a = 0`,
/// fof: `u = top or a = 0`, cou: `u = bot or a = 1`.
pub fn ind_frame(omega: &FinLattice, variant: Variant) -> Result<AdFrame> {
    if omega.is_trivial() {
        return Err(Error::TrivialFrame);
    }
    let (bot, top, m) = (omega.bot(), omega.top(), omega.len());
    let tot = Relation::from_fn(m, 2, |u, a| u == top || a == 1);
    let con = Relation::from_fn(m, 2, |u, a| u == bot || a == 0);
    let fof = Relation::from_fn(m, 2, |u, a| u == top || a == 0);
    let cou = Relation::from_fn(m, 2, |u, a| u == bot || a == 1);
    AdFrame::new(omega.clone(), FinLattice::chain(2), [tot, con, fof, cou], variant)
}

/// `Ind(ψ) = (ψ, id) : Ind(Ω) -> Ind(Ω')` for a frame homomorphism `ψ`.
pub fn ind_hom(psi: &[usize], omega: &FinLattice, omega2: &FinLattice, variant: Variant) -> Result<AdFrameHom> {
    if let Some(w) = omega.hom_violation(psi, omega2) {
        return Err(Error::NotALatticeHom(w));
    }
    let s = Arc::new(ind_frame(omega, variant)?);
    let t = Arc::new(ind_frame(omega2, variant)?);
    Ok(AdFrameHom::new(s, t, psi.to_vec(), vec![0, 1]))
}

/// The counit `ε = (id, bnd) : Ind|ΩL| -> ΩL`, with `bnd(0) = bot`, `bnd(1) = top`.
pub fn epsilon_hom(f: Arc<AdFrame>) -> Result<AdFrameHom> {
    let source = Arc::new(ind_frame(f.omega(), f.variant())?);
    let phi = (0..f.omega().len()).collect();
    let p = vec![f.ell().bot(), f.ell().top()];
    Ok(AdFrameHom::new(source, f, phi, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adframe::{build_ado, validate_adframe, validate_hom, RelKind};
    use crate::finord::FinPreTopSpace;

    #[test]
    fn ind_of_two_element_frame() {
        let f = ind_frame(&FinLattice::chain(2), Variant::Both).unwrap();
        for k in RelKind::ALL {
            assert_eq!(f.rel(k).len(), 3, "{}", k.name());
        }
        assert!(validate_adframe(&f).unwrap().passed());
    }

    #[test]
    fn trivial_frame_is_rejected() {
        assert_eq!(ind_frame(&FinLattice::chain(1), Variant::Up), Err(Error::TrivialFrame));
    }

    #[test]
    fn ind_of_identity_is_identity() {
        let c = FinLattice::chain(3);
        let h = ind_hom(&[0, 1, 2], &c, &c, Variant::Both).unwrap();
        assert_eq!(h.p(), &[0, 1]);
        assert!(validate_hom(&h).passed());
    }

    #[test]
    fn epsilon_on_ado_terminal() {
        let f = Arc::new(build_ado(&FinPreTopSpace::terminal(), Variant::Both).unwrap());
        let e = epsilon_hom(f).unwrap();
        assert_eq!(e.p(), &[0, 1]);
        assert!(validate_hom(&e).passed());
    }
}
