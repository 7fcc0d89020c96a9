//! The theorem registry: each entry is an executable check on one instance,
//! a preordered space together with a variant.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::functors::{discr, frame_points, ind_space};
use super::generate::all_morphisms;
use super::iso::{adframe_iso, iso_map_violation, pretop_iso, DEFAULT_ISO_BUDGET};
use crate::adframe::{
    ado_hom_between, build_ado, check_lsc, check_usc, epsilon_hom, ind_frame, ind_hom, validate_adframe,
    validate_hom, AdFrame, AdFrameHom, Variant,
};
use crate::duality::{adpt_hom, adpt_space, eta_into, is_ad_sober, is_ad_t0, transpose, Spectrum};
use crate::error::{Error, Result};
use crate::finord::{subset_lattice, FinLattice, FinPreTopSpace, FinTopSpace, LatticeKind};
use crate::sobrify::{
    ads_adpt_iso, ads_hom, ads_space, eta_preimage_violation, order_iso_violation, standard_sobrification,
    AdsSpace, IrreduciblePair, StandardSobrification,
};
use crate::subset::Subset;

/// Candidate maps scanned when enumerating morphisms inside one check.
pub const MAP_SCAN_CAP: usize = 4096;

/// Lattice homomorphism searches inside one check.
const HOM_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    AdoValid,
    AdjTriangle,
    AdjExists,
    UscLsc,
    AdsIso,
    OsIso,
    EtaPreimage,
    AdsoberEq,
    NatInd,
    NatDiscr,
    CexAds,
    HomeoAds,
    AdT0Lemma,
    Idempotent,
    IndValid,
    EpsValid,
    IndAdj,
    LiftSquare,
    CexLift,
}

impl TheoremId {
    pub const ALL: [TheoremId; 19] = [
        TheoremId::AdoValid,
        TheoremId::AdjTriangle,
        TheoremId::AdjExists,
        TheoremId::UscLsc,
        TheoremId::AdsIso,
        TheoremId::OsIso,
        TheoremId::EtaPreimage,
        TheoremId::AdsoberEq,
        TheoremId::NatInd,
        TheoremId::NatDiscr,
        TheoremId::CexAds,
        TheoremId::HomeoAds,
        TheoremId::AdT0Lemma,
        TheoremId::Idempotent,
        TheoremId::IndValid,
        TheoremId::EpsValid,
        TheoremId::IndAdj,
        TheoremId::LiftSquare,
        TheoremId::CexLift,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::AdoValid => "ADO-VALID",
            TheoremId::AdjTriangle => "ADJ-TRIANGLE",
            TheoremId::AdjExists => "ADJ-EXISTS",
            TheoremId::UscLsc => "USC-LSC",
            TheoremId::AdsIso => "ADS-ISO",
            TheoremId::OsIso => "OS-ISO",
            TheoremId::EtaPreimage => "ETA-PREIMAGE",
            TheoremId::AdsoberEq => "ADSOBER-EQ",
            TheoremId::NatInd => "NAT-IND",
            TheoremId::NatDiscr => "NAT-DISCR",
            TheoremId::CexAds => "CEX-ADS",
            TheoremId::HomeoAds => "HOMEO-ADS",
            TheoremId::AdT0Lemma => "ADT0-LEMMA",
            TheoremId::Idempotent => "IDEMPOTENT",
            TheoremId::IndValid => "IND-VALID",
            TheoremId::EpsValid => "EPS-VALID",
            TheoremId::IndAdj => "IND-ADJ",
            TheoremId::LiftSquare => "LIFT-SQUARE",
            TheoremId::CexLift => "CEX-LIFT",
        }
    }

    pub fn from_code(code: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.code().eq_ignore_ascii_case(code))
            .ok_or_else(|| Error::UnknownTheorem(code.to_string()))
    }

    /// Entries whose claim is known to be false in general; a failing
    /// instance is reported as expected-fail rather than fail.
    pub fn expected_fail(self) -> bool {
        matches!(self, TheoremId::CexAds | TheoremId::CexLift)
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::AdoValid => "adO X is an ad-frame",
            TheoremId::AdjTriangle => "every map X -> adpt ΩL has a unique transpose ΩL -> adO X through η_X",
            TheoremId::AdjExists => "transposition is a bijection of hom-sets, natural in X",
            TheoremId::UscLsc => "(usc)/(lsc) of adO X match semi-closedness of X; (usc)/(lsc) frames have semi-closed spectra",
            TheoremId::AdsIso => "X^ads is isomorphic to adpt(adO X) through the units",
            TheoremId::OsIso => "◊^ad and [·] are order-isomorphisms onto the opens and up-sets of X^ads",
            TheoremId::EtaPreimage => "η_X⁻¹(◊^ad U) = U and η_X⁻¹([A]) = A",
            TheoremId::AdsoberEq => "η_X bijective, η_X an isomorphism, and ad-sobriety coincide",
            TheoremId::NatInd => "(Ind X)^ads is naturally isomorphic to Ind(X^s)",
            TheoremId::NatDiscr => "(Discr X)^ads is naturally isomorphic to X",
            TheoremId::CexAds => "|X^ads| is homeomorphic to |X|^s (false in general)",
            TheoremId::HomeoAds => "under the semi-closed hypotheses, (C, [x]) ↦ C is a natural homeomorphism |X^ads| -> |X|^s",
            TheoremId::AdT0Lemma => "X is ad-sober iff it is ad-T0 and its only irreducible pairs are (cl{x}, [x])",
            TheoremId::Idempotent => "X^ads and adpt(adO X) are ad-sober",
            TheoremId::IndValid => "Ind(Ω) is an ad-frame for non-trivial Ω",
            TheoremId::EpsValid => "ε : Ind|ΩL| -> ΩL is an ad-frame homomorphism sending 0, 1 to bottom, top",
            TheoremId::IndAdj => "every hom Ind(Ω') -> ΩL is ε ∘ Ind(ψ) for a unique frame hom ψ",
            TheoremId::LiftSquare => "adO(Ind X) is isomorphic to Ind(O X) for non-empty X",
            TheoremId::CexLift => "|adpt(adO X)| is homeomorphic to pt(O X) (false in general)",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::from_code(s)
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<TheoremId, D::Error> {
        let s = String::deserialize(d)?;
        TheoremId::from_code(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ExpectedFail,
    /// The instance lies outside the hypotheses of the claim.
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub witness: Option<String>,
}

impl Outcome {
    fn pass() -> Outcome {
        Outcome { verdict: Verdict::Pass, witness: None }
    }

    fn fail(w: impl Into<String>) -> Outcome {
        Outcome { verdict: Verdict::Fail, witness: Some(w.into()) }
    }

    fn skip(why: impl Into<String>) -> Outcome {
        Outcome { verdict: Verdict::Skip, witness: Some(why.into()) }
    }

    fn from_violation(v: Option<String>) -> Outcome {
        v.map_or_else(Outcome::pass, Outcome::fail)
    }
}

/// Runs one registry check. Errors raised inside the check count as failures.
pub fn check_instance(id: TheoremId, x: &FinPreTopSpace, variant: Variant) -> Outcome {
    let run = || -> Result<Outcome> {
        match id {
            TheoremId::AdoValid => {
                let r = validate_adframe(&build_ado(x, variant)?)?;
                Ok(Outcome::from_violation(r.first_failure().map(|c| describe(&c.name, &c.witness))))
            }
            TheoremId::AdjTriangle => adj_triangle(x, variant).map(Outcome::from_violation),
            TheoremId::AdjExists => adj_exists(x, variant).map(Outcome::from_violation),
            TheoremId::UscLsc => usc_lsc(x, variant).map(Outcome::from_violation),
            TheoremId::AdsIso => match ads_adpt_iso(x, variant) {
                Ok(_) => Ok(Outcome::pass()),
                Err(Error::Internal(w)) => Ok(Outcome::fail(w)),
                Err(e) => Err(e),
            },
            TheoremId::OsIso => order_iso_violation(x, &ads_space(x, variant)?).map(Outcome::from_violation),
            TheoremId::EtaPreimage => {
                eta_preimage_violation(x, &ads_space(x, variant)?).map(Outcome::from_violation)
            }
            TheoremId::AdsoberEq => adsober_eq(x, variant).map(Outcome::from_violation),
            TheoremId::NatInd => nat_ind(x, variant).map(Outcome::from_violation),
            TheoremId::NatDiscr => nat_discr(x, variant).map(Outcome::from_violation),
            TheoremId::CexAds => cex_ads(x, variant),
            TheoremId::HomeoAds => homeo_ads(x, variant),
            TheoremId::AdT0Lemma => ad_t0_lemma(x, variant).map(Outcome::from_violation),
            TheoremId::Idempotent => idempotent(x, variant).map(Outcome::from_violation),
            TheoremId::IndValid => {
                let Some(omega) = nontrivial_opens(x)? else {
                    return Ok(Outcome::skip("empty space: O X is trivial"));
                };
                let r = validate_adframe(&ind_frame(&omega, variant)?)?;
                Ok(Outcome::from_violation(r.first_failure().map(|c| describe(&c.name, &c.witness))))
            }
            TheoremId::EpsValid => eps_valid(x, variant),
            TheoremId::IndAdj => ind_adj(x, variant),
            TheoremId::LiftSquare => lift_square(x, variant),
            TheoremId::CexLift => cex_lift(x, variant),
        }
    };
    match run() {
        Ok(o) => o,
        Err(e) => Outcome::fail(format!("error: {e}")),
    }
}

fn describe(name: &str, witness: &Option<String>) -> String {
    match witness {
        Some(w) => format!("{name}: {w}"),
        None => name.to_string(),
    }
}

fn nontrivial_opens(x: &FinPreTopSpace) -> Result<Option<FinLattice>> {
    let omega = subset_lattice(x, LatticeKind::Opens)?;
    Ok((!omega.is_trivial()).then_some(omega))
}

/// The frames an instance is paired with: `adO X` and, when defined, `Ind(O X)`.
fn test_frames(x: &FinPreTopSpace, variant: Variant) -> Result<Vec<(&'static str, Arc<AdFrame>)>> {
    let mut out = vec![("adO X", Arc::new(build_ado(x, variant)?))];
    if let Some(omega) = nontrivial_opens(x)? {
        out.push(("Ind(O X)", Arc::new(ind_frame(&omega, variant)?)));
    }
    Ok(out)
}

/// For a map `f : X -> adpt F`: `f^!` is a valid homomorphism, satisfies the
/// triangle, is the only one that does (when small enough to scan), and is
/// recovered by transposing `adpt(f^!) ∘ η_X` again.
pub fn triangle_violation(
    x: &FinPreTopSpace,
    f: &[usize],
    frame: &Arc<AdFrame>,
    spec: &Spectrum,
) -> Result<Option<String>> {
    let t = transpose(f, x, frame.clone(), spec)?;
    if !t.valid {
        let r = validate_hom(&t.hom);
        let c = r.first_failure().expect("invalid report has a failure");
        return Ok(Some(format!("transpose of {f:?} is not a homomorphism: {}", describe(&c.name, &c.witness))));
    }
    if !t.triangle {
        return Ok(Some(format!("adpt(f^!) ∘ η ≠ f for f = {f:?}")));
    }
    if t.unique == Some(false) {
        return Ok(Some(format!("transpose of {f:?} is not the only homomorphism through η")));
    }
    let ado_x = t.hom.target().clone();
    let spec_x = adpt_space(&ado_x)?;
    let eta = eta_into(x, &ado_x, &spec_x)?;
    let back = adpt_hom(&t.hom, spec, &spec_x)?;
    let g: Vec<usize> = eta.iter().map(|&e| back[e]).collect();
    let again = transpose(&g, x, frame.clone(), spec)?;
    if !again.hom.same_maps(&t.hom) {
        return Ok(Some(format!("round trip of the transpose of {f:?} changes the homomorphism")));
    }
    Ok(None)
}

fn adj_triangle(x: &FinPreTopSpace, variant: Variant) -> Result<Option<String>> {
    for (name, frame) in test_frames(x, variant)? {
        let spec = adpt_space(&frame)?;
        for f in all_morphisms(x, &spec.space, MAP_SCAN_CAP)? {
            if let Some(w) = triangle_violation(x, &f, &frame, &spec)? {
                return Ok(Some(format!("{name}: {w}")));
            }
        }
    }
    Ok(None)
}

/// Every valid homomorphism `frame -> adO X`, or `None` past the budget.
fn valid_homs(frame: &Arc<AdFrame>, ado_x: &Arc<AdFrame>) -> Result<Option<Vec<AdFrameHom>>> {
    let phis = match frame.omega().homs_to(ado_x.omega(), HOM_BUDGET) {
        Err(Error::BudgetExceeded(_)) => return Ok(None),
        r => r?,
    };
    let ps = match frame.ell().homs_to(ado_x.ell(), HOM_BUDGET) {
        Err(Error::BudgetExceeded(_)) => return Ok(None),
        r => r?,
    };
    if phis.len() * ps.len() > MAP_SCAN_CAP {
        return Ok(None);
    }
    let mut out = Vec::new();
    for phi in &phis {
        for p in &ps {
            let h = AdFrameHom::new(frame.clone(), ado_x.clone(), phi.clone(), p.clone());
            if validate_hom(&h).passed() {
                out.push(h);
            }
        }
    }
    Ok(Some(out))
}

fn adj_exists(x: &FinPreTopSpace, variant: Variant) -> Result<Option<String>> {
    let ado_x = Arc::new(build_ado(x, variant)?);
    let spec_x = adpt_space(&ado_x)?;
    let eta = eta_into(x, &ado_x, &spec_x)?;
    let endos = all_morphisms(x, x, MAP_SCAN_CAP)?;
    for (name, frame) in test_frames(x, variant)? {
        let spec = adpt_space(&frame)?;
        let maps = all_morphisms(x, &spec.space, MAP_SCAN_CAP)?;
        let mut transposes = Vec::with_capacity(maps.len());
        for f in &maps {
            let t = transpose(f, x, frame.clone(), &spec)?;
            if !t.valid {
                return Ok(Some(format!("{name}: transpose of {f:?} is not a homomorphism")));
            }
            transposes.push(t.hom);
        }
        for (i, j) in (0..maps.len()).flat_map(|i| (i + 1..maps.len()).map(move |j| (i, j))) {
            if transposes[i].same_maps(&transposes[j]) {
                return Ok(Some(format!("{name}: maps {:?} and {:?} share a transpose", maps[i], maps[j])));
            }
        }
        if let Some(homs) = valid_homs(&frame, &ado_x)? {
            if homs.len() != maps.len() {
                return Ok(Some(format!(
                    "{name}: {} maps into the spectrum but {} homomorphisms into adO X",
                    maps.len(),
                    homs.len()
                )));
            }
            for h in &homs {
                let back = adpt_hom(h, &spec, &spec_x)?;
                let g: Vec<usize> = eta.iter().map(|&e| back[e]).collect();
                let t = transpose(&g, x, frame.clone(), &spec)?;
                if !t.hom.same_maps(h) {
                    return Ok(Some(format!("{name}: homomorphism {:?} is not the transpose of its map", h.phi())));
                }
            }
        }
        // (f ∘ g)^! = adO(g) ∘ f^!
        for g in &endos {
            let ado_g = ado_hom_between(g, ado_x.clone(), ado_x.clone())?;
            for (f, tf) in maps.iter().zip(&transposes) {
                let fg: Vec<usize> = g.iter().map(|&i| f[i]).collect();
                let lhs = transpose(&fg, x, frame.clone(), &spec)?.hom;
                if !lhs.same_maps(&tf.then(&ado_g)?) {
                    return Ok(Some(format!("{name}: transposition not natural at f = {f:?}, g = {g:?}")));
                }
            }
        }
    }
    Ok(None)
}

fn usc_lsc(x: &FinPreTopSpace, variant: Variant) -> Result<Option<String>> {
    let ado = build_ado(x, variant)?;
    if variant.has_up() && check_usc(&ado)? != x.is_upper_semi_closed() {
        return Ok(Some(format!("(usc) of adO X is {} but X upper semi-closed is {}", !x.is_upper_semi_closed(), x.is_upper_semi_closed())));
    }
    if variant.has_down() && check_lsc(&ado)? != x.is_lower_semi_closed() {
        return Ok(Some(format!("(lsc) of adO X is {} but X lower semi-closed is {}", !x.is_lower_semi_closed(), x.is_lower_semi_closed())));
    }
    for (name, frame) in test_frames(x, variant)? {
        if let Some(w) = spectrum_semiclosed_violation(&frame)? {
            return Ok(Some(format!("{name}: {w}")));
        }
    }
    Ok(None)
}

/// A frame satisfying (usc) (resp. (lsc)) has an upper (resp. lower)
/// semi-closed spectrum.
pub fn spectrum_semiclosed_violation(frame: &AdFrame) -> Result<Option<String>> {
    let spec = adpt_space(frame)?;
    if frame.variant().has_up() && check_usc(frame)? && !spec.space.is_upper_semi_closed() {
        return Ok(Some("(usc) frame with a spectrum that is not upper semi-closed".into()));
    }
    if frame.variant().has_down() && check_lsc(frame)? && !spec.space.is_lower_semi_closed() {
        return Ok(Some("(lsc) frame with a spectrum that is not lower semi-closed".into()));
    }
    Ok(None)
}

fn adsober_eq(x: &FinPreTopSpace, variant: Variant) -> Result<Option<String>> {
    let s = is_ad_sober(x, variant)?;
    let ads = ads_space(x, variant)?;
    let unit = ads.unit(x)?;
    let iso = iso_map_violation(&unit, x, &ads.space);
    if s.sober != iso.is_none() {
        return Ok(Some(format!(
            "ad-sober is {} but η_X is {}an isomorphism ({})",
            s.sober,
            if iso.is_none() { "" } else { "not " },
            iso.or(s.witness).unwrap_or_default()
        )));
    }
    Ok(None)
}

fn ad_t0_lemma(x: &FinPreTopSpace, variant: Variant) -> Result<Option<String>> {
    let s = is_ad_sober(x, variant)?;
    let ads = ads_space(x, variant)?;
    let point_pairs: Vec<IrreduciblePair> = (0..x.n())
        .map(|p| IrreduciblePair { closed: x.closure(Subset::singleton(p)), class_rep: x.preorder().class_rep(p) })
        .collect();
    let only_point_pairs = ads.pairs.iter().all(|q| point_pairs.contains(q));
    let rhs = is_ad_t0(x) && only_point_pairs;
    if s.sober != rhs {
        return Ok(Some(format!(
            "ad-sober is {}, ad-T0 is {}, only point pairs is {}",
            s.sober,
            is_ad_t0(x),
            only_point_pairs
        )));
    }
    Ok(None)
}

/// `adpt F` is ad-sober.
pub fn spectrum_sober_violation(frame: &AdFrame) -> Result<Option<String>> {
    let spec = adpt_space(frame)?;
    let s = is_ad_sober(&spec.space, frame.variant())?;
    Ok((!s.sober).then(|| format!("spectrum is not ad-sober: {}", s.witness.unwrap_or_default())))
}

fn idempotent(x: &FinPreTopSpace, variant: Variant) -> Result<Option<String>> {
    let ads = ads_space(x, variant)?;
    let s = is_ad_sober(&ads.space, variant)?;
    if !s.sober {
        return Ok(Some(format!("X^ads is not ad-sober: {}", s.witness.unwrap_or_default())));
    }
    let inner = ads_space(&ads.space, variant)?;
    let unit = inner.unit(&ads.space)?;
    if let Some(w) = iso_map_violation(&unit, &ads.space, &inner.space) {
        return Ok(Some(format!("η at X^ads is not an isomorphism: {w}")));
    }
    for (name, frame) in test_frames(x, variant)? {
        if let Some(w) = spectrum_sober_violation(&frame)? {
            return Ok(Some(format!("{name}: {w}")));
        }
    }
    Ok(None)
}

/// Index of each pair's closed set among the irreducible closed sets.
fn projection(ads: &AdsSpace, sob: &StandardSobrification) -> Result<Vec<usize>> {
    ads.pairs
        .iter()
        .map(|p| {
            sob.closed_sets
                .iter()
                .position(|&c| c == p.closed)
                .ok_or_else(|| Error::Internal(format!("{:?} is not irreducible", p.closed)))
        })
        .collect()
}

/// `f^s(C) = cl f[C]` as an index table.
fn sob_map(f: &[usize], y: &FinPreTopSpace, xs: &StandardSobrification, ys: &StandardSobrification) -> Result<Vec<usize>> {
    xs.closed_sets
        .iter()
        .map(|&c| {
            let d = y.closure(c.image(f));
            ys.closed_sets
                .iter()
                .position(|&e| e == d)
                .ok_or_else(|| Error::Internal(format!("cl f[{c:?}] is not irreducible")))
        })
        .collect()
}

/// `π : (Ind X)^ads -> Ind(X^s)`, `(C, X) ↦ C`, is an isomorphism.
pub fn nat_ind_object_violation(t: &FinTopSpace, variant: Variant) -> Result<Option<String>> {
    let x = ind_space(t);
    let ads = ads_space(&x, variant)?;
    let sob = standard_sobrification(&x)?;
    let pi = projection(&ads, &sob)?;
    Ok(iso_map_violation(&pi, &ads.space, &ind_space(&sob.space)).map(|w| format!("π is not an isomorphism: {w}")))
}

/// `π_Y ∘ f^ads = f^s ∘ π_X` for a continuous `f : X -> Y`.
pub fn nat_ind_square_violation(f: &[usize], tx: &FinTopSpace, ty: &FinTopSpace, variant: Variant) -> Result<Option<String>> {
    let (x, y) = (ind_space(tx), ind_space(ty));
    let (xa, ya) = (ads_space(&x, variant)?, ads_space(&y, variant)?);
    let (xs, ys) = (standard_sobrification(&x)?, standard_sobrification(&y)?);
    let (px, py) = (projection(&xa, &xs)?, projection(&ya, &ys)?);
    let fa = ads_hom(f, &x, &y, &xa, &ya)?;
    let fs = sob_map(f, &y, &xs, &ys)?;
    Ok((0..xa.pairs.len())
        .find(|&i| py[fa[i]] != fs[px[i]])
        .map(|i| format!("square fails at pair {:?} for f = {f:?}", xa.pairs[i])))
}

/// The unit `Discr X -> (Discr X)^ads` is an isomorphism.
pub fn nat_discr_object_violation(t: &FinTopSpace, variant: Variant) -> Result<Option<String>> {
    let x = discr(t);
    let ads = ads_space(&x, variant)?;
    let unit = ads.unit(&x)?;
    Ok(iso_map_violation(&unit, &x, &ads.space).map(|w| format!("unit is not an isomorphism: {w}")))
}

/// `η_Y ∘ f = f^ads ∘ η_X` for a continuous `f : X -> Y`.
pub fn nat_discr_square_violation(f: &[usize], tx: &FinTopSpace, ty: &FinTopSpace, variant: Variant) -> Result<Option<String>> {
    let (x, y) = (discr(tx), discr(ty));
    let (xa, ya) = (ads_space(&x, variant)?, ads_space(&y, variant)?);
    let (ux, uy) = (xa.unit(&x)?, ya.unit(&y)?);
    let fa = ads_hom(f, &x, &y, &xa, &ya)?;
    Ok((0..x.n()).find(|&p| uy[f[p]] != fa[ux[p]]).map(|p| format!("square fails at point {p} for f = {f:?}")))
}

fn nat_ind(x: &FinPreTopSpace, variant: Variant) -> Result<Option<String>> {
    let t = x.topology();
    if let Some(w) = nat_ind_object_violation(t, variant)? {
        return Ok(Some(w));
    }
    for f in all_morphisms(&ind_space(t), &ind_space(t), MAP_SCAN_CAP)? {
        if let Some(w) = nat_ind_square_violation(&f, t, t, variant)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn nat_discr(x: &FinPreTopSpace, variant: Variant) -> Result<Option<String>> {
    let t = x.topology();
    if let Some(w) = nat_discr_object_violation(t, variant)? {
        return Ok(Some(w));
    }
    for f in all_morphisms(&ind_space(t), &ind_space(t), MAP_SCAN_CAP)? {
        if let Some(w) = nat_discr_square_violation(&f, t, t, variant)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn homeomorphic(a: &FinTopSpace, b: &FinTopSpace) -> Result<bool> {
    Ok(pretop_iso(&discr(a), &discr(b), DEFAULT_ISO_BUDGET)?.is_some())
}

fn expected_fail_or_pass(holds: bool, witness: String) -> Outcome {
    if holds {
        Outcome::pass()
    } else {
        Outcome { verdict: Verdict::ExpectedFail, witness: Some(witness) }
    }
}

fn cex_ads(x: &FinPreTopSpace, variant: Variant) -> Result<Outcome> {
    let ads = ads_space(x, variant)?;
    let sob = standard_sobrification(x)?;
    let holds = homeomorphic(ads.space.topology(), &sob.space)?;
    Ok(expected_fail_or_pass(
        holds,
        format!("|X^ads| has {} points, |X|^s has {}; not homeomorphic", ads.space.n(), sob.space.n()),
    ))
}

fn cex_lift(x: &FinPreTopSpace, variant: Variant) -> Result<Outcome> {
    let ado = build_ado(x, variant)?;
    let spec = adpt_space(&ado)?;
    let (pts, _) = frame_points(ado.omega())?;
    let holds = homeomorphic(spec.space.topology(), &pts)?;
    Ok(expected_fail_or_pass(
        holds,
        format!("|adpt(adO X)| has {} points, pt(O X) has {}; not homeomorphic", spec.space.n(), pts.n()),
    ))
}

/// Whether the hypotheses of the homeomorphism `|X^ads| ≅ |X|^s` hold under
/// the variant's reading: semi-closedness on the variant's sides, and every
/// irreducible closed `C` containing an `x` with `C ⊆ ↑x` (up), `C ⊆ ↓x`
/// (down), or both for the same `x`. Alternatively `X` is T1 and sober.
pub fn homeo_hypotheses(x: &FinPreTopSpace, variant: Variant) -> bool {
    let semi = (!variant.has_up() || x.is_upper_semi_closed()) && (!variant.has_down() || x.is_lower_semi_closed());
    let anchored = x.topology().irreducible_closed_sets().iter().all(|&c| {
        c.iter().any(|p| {
            (!variant.has_up() || c.is_subset(x.up(p))) && (!variant.has_down() || c.is_subset(x.down(p)))
        })
    });
    let t1 = (0..x.n()).all(|p| x.topology().is_closed(Subset::singleton(p)));
    // a finite T1 space is discrete, hence sober
    (semi && anchored) || t1
}

fn homeo_ads(x: &FinPreTopSpace, variant: Variant) -> Result<Outcome> {
    if !homeo_hypotheses(x, variant) {
        return Ok(Outcome::skip(format!("hypotheses fail for the {variant} reading")));
    }
    let ads = ads_space(x, variant)?;
    let sob = standard_sobrification(x)?;
    let pi = projection(&ads, &sob)?;
    if let Some(w) = iso_map_violation(&pi, &discr(ads.space.topology()), &discr(&sob.space)) {
        return Ok(Outcome::fail(format!("π is not a homeomorphism: {w}")));
    }
    // π ∘ f^ads = f^s ∘ π over endomorphisms
    for f in all_morphisms(x, x, MAP_SCAN_CAP)? {
        let fa = ads_hom(&f, x, x, &ads, &ads)?;
        let fs = sob_map(&f, x, &sob, &sob)?;
        if let Some(i) = (0..ads.pairs.len()).find(|&i| pi[fa[i]] != fs[pi[i]]) {
            return Ok(Outcome::fail(format!("π not natural at pair {:?} for f = {f:?}", ads.pairs[i])));
        }
    }
    Ok(Outcome::pass())
}

fn eps_valid(x: &FinPreTopSpace, variant: Variant) -> Result<Outcome> {
    if nontrivial_opens(x)?.is_none() {
        return Ok(Outcome::skip("empty space: adO X is trivial"));
    }
    for (name, frame) in test_frames(x, variant)? {
        let e = epsilon_hom(frame.clone())?;
        if let Some(c) = validate_hom(&e).first_failure() {
            return Ok(Outcome::fail(format!("{name}: {}", describe(&c.name, &c.witness))));
        }
        if e.p() != [frame.ell().bot(), frame.ell().top()] {
            return Ok(Outcome::fail(format!("{name}: ε does not send 0, 1 to bottom, top")));
        }
    }
    Ok(Outcome::pass())
}

/// Small non-trivial frames used as `Ω'`: chains of length 2 and 3 and the
/// four-element Boolean algebra.
pub fn small_frames() -> Vec<FinLattice> {
    let boolean = FinLattice::from_sets(&[Subset(0), Subset(1), Subset(2), Subset(3)]).expect("powerset of 2");
    vec![FinLattice::chain(2), FinLattice::chain(3), boolean]
}

/// Every homomorphism `Ind(Ω') -> F` is `ε_F ∘ Ind(ψ)` for exactly one
/// frame homomorphism `ψ`, with `p` forced to be the bounds map; and every
/// `ψ` gives such a homomorphism.
pub fn ind_adj_violation(omega2: &FinLattice, frame: &Arc<AdFrame>) -> Result<Option<String>> {
    let variant = frame.variant();
    let source = Arc::new(ind_frame(omega2, variant)?);
    let eps = epsilon_hom(frame.clone())?;
    let psis = omega2.homs_to(frame.omega(), HOM_BUDGET)?;
    let ps = FinLattice::chain(2).homs_to(frame.ell(), HOM_BUDGET)?;
    let bnd = [frame.ell().bot(), frame.ell().top()];
    let factor = |psi: &[usize]| -> Result<AdFrameHom> {
        ind_hom(psi, omega2, frame.omega(), variant)?.then(&eps)
    };
    for psi in &psis {
        let h = factor(psi)?;
        if !validate_hom(&h).passed() {
            return Ok(Some(format!("ε ∘ Ind({psi:?}) is not a homomorphism")));
        }
    }
    for phi in &psis {
        for p in &ps {
            let h = AdFrameHom::new(source.clone(), frame.clone(), phi.clone(), p.clone());
            if !validate_hom(&h).passed() {
                continue;
            }
            if p.as_slice() != bnd {
                return Ok(Some(format!("homomorphism with p = {p:?} is not the bounds map")));
            }
            let mut matches = 0;
            for psi in &psis {
                if factor(psi)?.same_maps(&h) {
                    matches += 1;
                }
            }
            if matches != 1 {
                return Ok(Some(format!("homomorphism with φ = {phi:?} factors {matches} times")));
            }
        }
    }
    Ok(None)
}

fn ind_adj(x: &FinPreTopSpace, variant: Variant) -> Result<Outcome> {
    let Some(omega) = nontrivial_opens(x)? else {
        return Ok(Outcome::skip("empty space: adO X is trivial"));
    };
    let mut sources = small_frames();
    sources.push(omega);
    for (name, frame) in test_frames(x, variant)? {
        for (i, o2) in sources.iter().enumerate() {
            if let Some(w) = ind_adj_violation(o2, &frame)? {
                return Ok(Outcome::fail(format!("{name}, Ω' #{i}: {w}")));
            }
        }
    }
    Ok(Outcome::pass())
}

fn lift_square(x: &FinPreTopSpace, variant: Variant) -> Result<Outcome> {
    let Some(omega) = nontrivial_opens(x)? else {
        return Ok(Outcome::skip("empty space"));
    };
    let a = build_ado(&ind_space(x.topology()), variant)?;
    let b = ind_frame(&omega, variant)?;
    Ok(match adframe_iso(&a, &b, DEFAULT_ISO_BUDGET)? {
        Some(_) => Outcome::pass(),
        None => Outcome::fail("adO(Ind X) is not isomorphic to Ind(O X)"),
    })
}
