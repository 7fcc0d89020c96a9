use crate::adframe::Variant;
use crate::error::{Error, Result};
use crate::finord::FinPreTopSpace;
use crate::sobrify::{ads_space, IrreduciblePair};
use crate::subset::Subset;

use super::spectrum::eta_map;

/// The specialization preorder meets the given preorder antisymmetrically.
pub fn is_ad_t0(x: &FinPreTopSpace) -> bool {
    x.specialization().intersect(x.preorder()).is_antisymmetric()
}

/// Verdict on ad-sobriety, computed along two independent routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdSobriety {
    pub sober: bool,
    /// Every irreducible pair is `(cl{x}, [x])` for exactly one `x`.
    pub via_pairs: bool,
    /// `η_X : X -> adpt(adO X)` is bijective.
    pub via_eta: bool,
    pub witness: Option<String>,
}

pub fn is_ad_sober(x: &FinPreTopSpace, variant: Variant) -> Result<AdSobriety> {
    let ads = ads_space(x, variant)?;
    let mut hits = vec![Vec::new(); ads.pairs.len()];
    for p in 0..x.n() {
        let pair = IrreduciblePair {
            closed: x.closure(Subset::singleton(p)),
            class_rep: x.preorder().class_rep(p),
        };
        let i = ads.find(pair).ok_or_else(|| Error::Internal(format!("(cl{{{p}}}, [{p}]) is not a pair")))?;
        hits[i].push(p);
    }
    let mut witness = None;
    for (i, h) in hits.iter().enumerate() {
        if h.is_empty() {
            witness = Some(format!("pair {:?} is not of the form (cl{{x}}, [x])", ads.pairs[i]));
            break;
        }
        if h.len() > 1 {
            witness = Some(format!("points {h:?} all give the pair {:?}", ads.pairs[i]));
            break;
        }
    }
    let via_pairs = witness.is_none();

    let (_, spec, eta) = eta_map(x, variant)?;
    let mut image: Vec<usize> = eta.clone();
    image.sort_unstable();
    image.dedup();
    let via_eta = image.len() == x.n() && spec.len() == x.n();
    if via_pairs != via_eta {
        return Err(Error::Internal(format!(
            "ad-sobriety routes disagree: pairs say {via_pairs}, η says {via_eta}"
        )));
    }
    Ok(AdSobriety { sober: via_pairs, via_pairs, via_eta, witness })
}
