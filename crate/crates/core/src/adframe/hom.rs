use std::sync::Arc;

use super::{AdFrame, Report};
use crate::error::{Error, Result};

/// A pair of lattice maps `phi: omega -> omega'` and `p: ell -> ell'`.
/// Construction does not validate; see [`validate_hom`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdFrameHom {
    source: Arc<AdFrame>,
    target: Arc<AdFrame>,
    phi: Vec<usize>,
    p: Vec<usize>,
}

impl AdFrameHom {
    pub fn new(source: Arc<AdFrame>, target: Arc<AdFrame>, phi: Vec<usize>, p: Vec<usize>) -> AdFrameHom {
        AdFrameHom { source, target, phi, p }
    }

    pub fn identity(f: Arc<AdFrame>) -> AdFrameHom {
        let phi = (0..f.omega().len()).collect();
        let p = (0..f.ell().len()).collect();
        AdFrameHom { source: f.clone(), target: f, phi, p }
    }

    pub fn source(&self) -> &Arc<AdFrame> {
        &self.source
    }

    pub fn target(&self) -> &Arc<AdFrame> {
        &self.target
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn p(&self) -> &[usize] {
        &self.p
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &AdFrameHom) -> Result<AdFrameHom> {
        if self.target.as_ref() != next.source.as_ref() {
            return Err(Error::Malformed("homomorphisms are not composable".into()));
        }
        Ok(AdFrameHom {
            source: self.source.clone(),
            target: next.target.clone(),
            phi: self.phi.iter().map(|&u| next.phi[u]).collect(),
            p: self.p.iter().map(|&a| next.p[a]).collect(),
        })
    }

    /// Same maps, regardless of which `Arc` holds the endpoints.
    pub fn same_maps(&self, other: &AdFrameHom) -> bool {
        self.phi == other.phi && self.p == other.p
    }
}

/// Lattice-homomorphism laws for both maps and preservation of the relations
/// read by the source's variant.
pub fn validate_hom(h: &AdFrameHom) -> Report {
    let (s, t) = (h.source(), h.target());
    let mut report = Report::default();
    report.push("phi is a lattice homomorphism", s.omega().hom_violation(h.phi(), t.omega()));
    report.push("p is a lattice homomorphism", s.ell().hom_violation(h.p(), t.ell()));
    if s.variant() != t.variant() {
        report.push(
            "variants agree",
            Some(format!("source reads {}, target reads {}", s.variant(), t.variant())),
        );
    }
    if !report.passed() {
        return report;
    }
    for &k in s.variant().relations() {
        let w = s
            .rel(k)
            .pairs()
            .find(|&(u, a)| !t.rel(k).contains(h.phi()[u], h.p()[a]))
            .map(|(u, a)| format!("({u}, {a}) in source but ({}, {}) not in target", h.phi()[u], h.p()[a]));
        report.push(format!("{} preserved", k.name()), w);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adframe::{build_ado, Variant};
    use crate::finord::{FinPreTopSpace, Preorder};

    #[test]
    fn identity_is_valid() {
        let f = Arc::new(build_ado(&FinPreTopSpace::sierpinski(Preorder::discrete(2)), Variant::Both).unwrap());
        assert!(validate_hom(&AdFrameHom::identity(f)).passed());
    }

    #[test]
    fn p_breaking_meets_is_caught() {
        let f = Arc::new(build_ado(&FinPreTopSpace::sierpinski(Preorder::discrete(2)), Variant::Both).unwrap());
        // ell is the four subsets of {0, 1}: ∅ {0} {1} {0,1}; send both atoms to the top
        let h = AdFrameHom::new(f.clone(), f, vec![0, 1, 2], vec![0, 3, 3, 3]);
        let r = validate_hom(&h);
        let fail = r.first_failure().unwrap();
        assert_eq!(fail.name, "p is a lattice homomorphism");
        assert!(fail.witness.as_ref().unwrap().contains("meet"));
    }
}
