use std::sync::Arc;

use super::spectrum::{adpt_hom, adpt_space, eta_into, Spectrum};
use crate::adframe::{build_ado, validate_hom, AdFrame, AdFrameHom};
use crate::error::{Error, Result};
use crate::finord::FinPreTopSpace;

/// Above this product of frame sizes the exhaustive uniqueness scan is skipped.
pub const UNIQUENESS_SCAN_LIMIT: usize = 16;

const HOM_SEARCH_BUDGET: usize = 200_000;

/// The transpose `f^! : ΩL -> adO X` of a point map `f : X -> adpt ΩL`,
/// with the outcome of its checks.
#[derive(Clone, Debug)]
pub struct Transpose {
    pub hom: AdFrameHom,
    /// `f^!` passes [`validate_hom`].
    pub valid: bool,
    /// `adpt(f^!) ∘ η_X = f`.
    pub triangle: bool,
    /// Whether `f^!` is the only valid homomorphism satisfying the triangle;
    /// `None` when the instance is too large for the exhaustive scan.
    pub unique: Option<bool>,
}

/// `g^!(v) = {x | v ∈ g(x)}`, `h^!(a) = {x | a ∈ h(x)}`.
pub fn transpose(f: &[usize], x: &FinPreTopSpace, frame: Arc<AdFrame>, spec: &Spectrum) -> Result<Transpose> {
    if f.len() != x.n() {
        return Err(Error::NotAPointMap(format!("map has {} entries for {} points", f.len(), x.n())));
    }
    if let Some(&bad) = f.iter().find(|&&i| i >= spec.len()) {
        return Err(Error::NotAPointMap(format!("{bad} is not a point of the spectrum")));
    }
    x.check_morphism(f, &spec.space)?;
    let ado_x = Arc::new(build_ado(x, frame.variant())?);
    let lookup = |l: &crate::finord::FinLattice, s: crate::Subset| {
        l.index_of(s)
            .ok_or_else(|| Error::Internal(format!("preimage {s:?} missing from adO X")))
    };
    let phi = spec
        .open_map
        .iter()
        .map(|o| lookup(ado_x.omega(), o.preimage(f)))
        .collect::<Result<Vec<_>>>()?;
    let p = spec
        .upset_map
        .iter()
        .map(|a| lookup(ado_x.ell(), a.preimage(f)))
        .collect::<Result<Vec<_>>>()?;
    let hom = AdFrameHom::new(frame.clone(), ado_x.clone(), phi, p);
    let valid = validate_hom(&hom).passed();

    let spec_x = adpt_space(&ado_x)?;
    let eta = eta_into(x, &ado_x, &spec_x)?;
    let satisfies = |h: &AdFrameHom| -> Result<bool> {
        let back = adpt_hom(h, spec, &spec_x)?;
        Ok((0..x.n()).all(|i| back[eta[i]] == f[i]))
    };
    let triangle = valid && satisfies(&hom)?;

    let unique = if frame.omega().len() * ado_x.omega().len() <= UNIQUENESS_SCAN_LIMIT {
        let phis = frame.omega().homs_to(ado_x.omega(), HOM_SEARCH_BUDGET)?;
        let ps = frame.ell().homs_to(ado_x.ell(), HOM_SEARCH_BUDGET)?;
        let mut matching = Vec::new();
        for phi in &phis {
            for p in &ps {
                let h = AdFrameHom::new(frame.clone(), ado_x.clone(), phi.clone(), p.clone());
                if validate_hom(&h).passed() && satisfies(&h)? {
                    matching.push(h);
                }
            }
        }
        Some(matching.len() == 1 && matching[0].same_maps(&hom))
    } else {
        None
    };
    Ok(Transpose { hom, valid, triangle, unique })
}
