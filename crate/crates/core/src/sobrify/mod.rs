//! Standard sobrification and ad-sobrification through irreducible pairs.

use std::collections::HashMap;

use crate::adframe::Variant;
use crate::duality::{eta_map, Spectrum};
use crate::error::{Error, Result};
use crate::finord::{equivalence_classes, FinPreTopSpace, FinTopSpace, Preorder};
use crate::limits;
use crate::subset::Subset;

/// A pair `(C, [x])`: an irreducible closed set and the class of `x` under
/// `<= ∩ >=`, named by its smallest member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IrreduciblePair {
    pub closed: Subset,
    pub class_rep: usize,
}

/// The standard sobrification: irreducible closed sets with opens `◊U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardSobrification {
    pub space: FinTopSpace,
    pub closed_sets: Vec<Subset>,
    /// `x ↦ cl{x}`.
    pub unit: Vec<usize>,
}

pub fn standard_sobrification(x: &FinPreTopSpace) -> Result<StandardSobrification> {
    let top = x.topology();
    let closed_sets = top.irreducible_closed_sets();
    check_cap(closed_sets.len())?;
    let opens: Vec<Subset> = top.opens().iter().map(|&u| diamond(&closed_sets, u)).collect();
    let space = FinTopSpace::new(closed_sets.len(), opens, false)
        .map_err(|e| Error::Internal(format!("sobrification opens: {e}")))?;
    let index: HashMap<Subset, usize> = closed_sets.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let unit = (0..x.n())
        .map(|p| {
            index
                .get(&top.closure(Subset::singleton(p)))
                .copied()
                .ok_or_else(|| Error::Internal("point closure is not irreducible".into()))
        })
        .collect::<Result<_>>()?;
    Ok(StandardSobrification { space, closed_sets, unit })
}

fn diamond(closed: &[Subset], u: Subset) -> Subset {
    Subset::from_points((0..closed.len()).filter(|&i| closed[i].meets(u)))
}

fn check_cap(n: usize) -> Result<()> {
    let cap = limits::max_points();
    if n > cap {
        Err(Error::CarrierTooLarge { points: n, cap })
    } else {
        Ok(())
    }
}

/// Whether `(c, [x])` satisfies the conditions the variant reads, evaluated
/// with `x` itself as representative.
pub fn pair_conditions_hold(x: &FinPreTopSpace, c: Subset, p: usize, variant: Variant) -> bool {
    let up = || c.meets(x.down(p)) && c.is_subset(x.closure(x.up(p)));
    let down = || c.meets(x.up(p)) && c.is_subset(x.closure(x.down(p)));
    (!variant.has_up() || up()) && (!variant.has_down() || down())
}

/// All irreducible pairs, ordered by closed set (canonically), then class.
pub fn irreducible_pairs(x: &FinPreTopSpace, variant: Variant) -> Result<Vec<IrreduciblePair>> {
    let closed = x.topology().irreducible_closed_sets();
    let classes = equivalence_classes(x.preorder());
    let mut out = Vec::new();
    for &c in &closed {
        for class in &classes {
            let rep = class.first().unwrap();
            let holds = pair_conditions_hold(x, c, rep, variant);
            if let Some(other) = class.iter().nth(1) {
                if pair_conditions_hold(x, c, other, variant) != holds {
                    return Err(Error::Internal(format!(
                        "pair conditions for {c:?} depend on the representative of {class:?}"
                    )));
                }
            }
            if holds {
                out.push(IrreduciblePair { closed: c, class_rep: rep });
            }
        }
    }
    Ok(out)
}

/// `X^ads`, with the maps `U ↦ ◊^ad U` (indexed like the opens of `X`) and
/// `A ↦ [A]` (indexed like the canonically ordered up-sets of `X`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdsSpace {
    pub space: FinPreTopSpace,
    pub pairs: Vec<IrreduciblePair>,
    pub diamond_map: Vec<Subset>,
    pub bracket_map: Vec<Subset>,
    /// Number of distinct `◊^ad U`; equal to the number of opens of `X`
    /// exactly when `◊^ad` is injective.
    pub distinct_diamonds: usize,
}

impl AdsSpace {
    /// Index of a pair, if present.
    pub fn find(&self, p: IrreduciblePair) -> Option<usize> {
        self.pairs.iter().position(|&q| q == p)
    }

    /// The unit `x ↦ (cl{x}, [x])`.
    pub fn unit(&self, x: &FinPreTopSpace) -> Result<Vec<usize>> {
        (0..x.n())
            .map(|p| {
                let pair = IrreduciblePair {
                    closed: x.closure(Subset::singleton(p)),
                    class_rep: x.preorder().class_rep(p),
                };
                self.find(pair).ok_or_else(|| Error::Internal(format!("(cl{{{p}}}, [{p}]) is not a pair")))
            })
            .collect()
    }
}

pub fn ads_space(x: &FinPreTopSpace, variant: Variant) -> Result<AdsSpace> {
    let pairs = irreducible_pairs(x, variant)?;
    check_cap(pairs.len())?;
    let n = pairs.len();
    let diamond_map: Vec<Subset> = x
        .opens()
        .iter()
        .map(|&u| Subset::from_points((0..n).filter(|&i| pairs[i].closed.meets(u))))
        .collect();
    let bracket_map: Vec<Subset> = x
        .upsets()?
        .iter()
        .map(|&a| Subset::from_points((0..n).filter(|&i| a.contains(pairs[i].class_rep))))
        .collect();
    let top = FinTopSpace::new(n, diamond_map.clone(), false)
        .map_err(|e| Error::Internal(format!("ads opens: {e}")))?;
    let distinct_diamonds = top.opens().len();
    let up = (0..n)
        .map(|i| Subset::from_points((0..n).filter(|&j| x.leq(pairs[i].class_rep, pairs[j].class_rep))))
        .collect();
    let space = FinPreTopSpace::new(top, Preorder::from_up_rows(up)?)?;
    Ok(AdsSpace { space, pairs, diamond_map, bracket_map, distinct_diamonds })
}

/// `f^ads (C, [x]) = (cl f[C], [f x])`.
pub fn ads_hom(f: &[usize], x: &FinPreTopSpace, y: &FinPreTopSpace, xs: &AdsSpace, ys: &AdsSpace) -> Result<Vec<usize>> {
    x.check_morphism(f, y)?;
    xs.pairs
        .iter()
        .map(|pr| {
            let image = IrreduciblePair {
                closed: y.closure(pr.closed.image(f)),
                class_rep: y.preorder().class_rep(f[pr.class_rep]),
            };
            ys.find(image)
                .ok_or_else(|| Error::Internal(format!("image {image:?} is not an irreducible pair")))
        })
        .collect()
}

/// Checks that `◊^ad` and `[·]` are order-isomorphisms onto the opens and
/// up-sets of `X^ads`. Returns a description of the first failure.
pub fn order_iso_violation(x: &FinPreTopSpace, ads: &AdsSpace) -> Result<Option<String>> {
    if ads.distinct_diamonds != x.opens().len() {
        return Ok(Some(format!(
            "◊^ad identifies opens: {} opens, {} images",
            x.opens().len(),
            ads.distinct_diamonds
        )));
    }
    let opens = x.opens();
    for i in 0..opens.len() {
        for j in 0..opens.len() {
            let lhs = opens[i].is_subset(opens[j]);
            let rhs = ads.diamond_map[i].is_subset(ads.diamond_map[j]);
            if lhs != rhs {
                return Ok(Some(format!("◊^ad fails order-reflection on {:?}, {:?}", opens[i], opens[j])));
            }
        }
    }
    let upsets = x.upsets()?;
    let target = ads.space.upsets()?;
    let mut images: Vec<Subset> = ads.bracket_map.clone();
    images.sort_by(Subset::canonical_cmp);
    images.dedup();
    if images != target {
        return Ok(Some(format!(
            "[·] is not a bijection onto up-sets: {} images, {} up-sets",
            images.len(),
            target.len()
        )));
    }
    for i in 0..upsets.len() {
        for j in 0..upsets.len() {
            if upsets[i].is_subset(upsets[j]) != ads.bracket_map[i].is_subset(ads.bracket_map[j]) {
                return Ok(Some(format!("[·] fails order-reflection on {:?}, {:?}", upsets[i], upsets[j])));
            }
        }
    }
    Ok(None)
}

/// `η⁻¹(◊^ad U) = U` and `η⁻¹([A]) = A` for the unit `η`.
pub fn eta_preimage_violation(x: &FinPreTopSpace, ads: &AdsSpace) -> Result<Option<String>> {
    let eta = ads.unit(x)?;
    for (u, d) in x.opens().iter().zip(&ads.diamond_map) {
        if d.preimage(&eta) != *u {
            return Ok(Some(format!("η⁻¹(◊^ad {u:?}) = {:?}", d.preimage(&eta))));
        }
    }
    for (a, b) in x.upsets()?.iter().zip(&ads.bracket_map) {
        if b.preimage(&eta) != *a {
            return Ok(Some(format!("η⁻¹([{a:?}]) = {:?}", b.preimage(&eta))));
        }
    }
    Ok(None)
}

/// The explicit bijection `(C, [x]) ↦ (opens meeting C, up-sets containing x)`
/// from `X^ads` onto `adpt(adO X)`.
#[derive(Clone, Debug)]
pub struct AdsAdptIso {
    pub ads: AdsSpace,
    pub spectrum: Spectrum,
    pub bijection: Vec<usize>,
}

/// Builds and verifies the isomorphism `X^ads ≅ adpt(adO X)`. A failed
/// verification is reported as [`Error::Internal`].
pub fn ads_adpt_iso(x: &FinPreTopSpace, variant: Variant) -> Result<AdsAdptIso> {
    let ads = ads_space(x, variant)?;
    let (f, spectrum, eta) = eta_map(x, variant)?;
    let (o, l) = (f.omega(), f.ell());
    let bijection = ads
        .pairs
        .iter()
        .map(|pr| {
            let mut nx = fixedbitset::FixedBitSet::with_capacity(o.len());
            nx.extend((0..o.len()).filter(|&u| o.label(u).unwrap().meets(pr.closed)));
            let mut ux = fixedbitset::FixedBitSet::with_capacity(l.len());
            ux.extend((0..l.len()).filter(|&a| l.label(a).unwrap().contains(pr.class_rep)));
            spectrum
                .find(&nx, &ux)
                .ok_or_else(|| Error::Internal(format!("{pr:?} does not map to a point")))
        })
        .collect::<Result<Vec<usize>>>()?;
    let n = ads.pairs.len();
    if spectrum.len() != n {
        return Err(Error::Internal(format!("{n} pairs but {} points", spectrum.len())));
    }
    let mut seen = vec![false; n];
    for &j in &bijection {
        if std::mem::replace(&mut seen[j], true) {
            return Err(Error::Internal(format!("two pairs map to point {j}")));
        }
    }
    for (i, u) in x.opens().iter().enumerate() {
        let ui = o.index_of(*u).unwrap();
        if ads.diamond_map[i].image(&bijection) != spectrum.open_map[ui] {
            return Err(Error::Internal(format!("◊^ad {u:?} is not carried to O_U")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if ads.space.leq(i, j) != spectrum.space.leq(bijection[i], bijection[j]) {
                return Err(Error::Internal(format!("order between pairs {i} and {j} not preserved")));
            }
        }
    }
    let unit = ads.unit(x)?;
    if (0..x.n()).any(|p| bijection[unit[p]] != eta[p]) {
        return Err(Error::Internal("the bijection does not commute with the units".into()));
    }
    Ok(AdsAdptIso { ads, spectrum, bijection })
}
