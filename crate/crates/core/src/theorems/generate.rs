use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adframe::{build_ado, ind_frame, AdFrame, RelKind, Variant};
use crate::error::{Error, Result};
use crate::finord::{FinLattice, FinPreTopSpace, FinTopSpace, Preorder};
use crate::subset::Subset;

/// Families of generated ad-frames.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameFamily {
    /// `adO X` of a random space.
    AdO,
    /// `Ind Ω` of a random non-trivial distributive lattice.
    Ind,
    /// One of the above with a required element removed from a relation.
    Mutated,
}

/// A generated ad-frame; mutated frames name the axiom they were built to break.
#[derive(Clone, Debug)]
pub struct GeneratedFrame {
    pub frame: AdFrame,
    pub family: FrameFamily,
    pub mutation: Option<&'static str>,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random preorder: each off-diagonal pair kept with probability 1/3, then closed.
pub fn random_preorder(n: usize, rng: &mut impl Rng) -> Preorder {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y)
        .filter(|_| rng.random_ratio(1, 3))
        .collect();
    Preorder::closure_of(n, &pairs).expect("indices in range")
}

/// A random topology: the closure of a few random subsets.
pub fn random_topology(n: usize, rng: &mut impl Rng) -> FinTopSpace {
    let k = if n == 0 { 0 } else { rng.random_range(0..=n + 1) };
    let gens: Vec<Subset> = (0..k).map(|_| Subset(rng.random::<u64>()) & Subset::full(n)).collect();
    FinTopSpace::new(n, gens, true).expect("closure of subsets is a topology")
}

pub fn random_space(n: usize, rng: &mut impl Rng) -> FinPreTopSpace {
    let t = random_topology(n, rng);
    FinPreTopSpace::new(t, random_preorder(n, rng)).expect("same carrier")
}

/// A random non-trivial distributive lattice: up-sets of a random preorder on
/// `1..=points` points.
pub fn random_distributive_lattice(points: usize, rng: &mut impl Rng) -> Result<FinLattice> {
    let k = rng.random_range(1..=points.max(1));
    let p = random_preorder(k, rng);
    FinLattice::from_sets(&p.upsets(crate::limits::max_lattice())?)
}

/// A continuous monotone map `x -> y`, drawn uniformly among all point maps
/// by rejection; `None` after `tries` failures.
pub fn random_morphism(x: &FinPreTopSpace, y: &FinPreTopSpace, tries: usize, rng: &mut impl Rng) -> Option<Vec<usize>> {
    if y.n() == 0 {
        return (x.n() == 0).then(Vec::new);
    }
    (0..tries)
        .map(|_| (0..x.n()).map(|_| rng.random_range(0..y.n())).collect::<Vec<usize>>())
        .find(|f| x.check_morphism(f, y).is_ok())
}

/// Every continuous monotone map `x -> y`. Fails past `cap` candidate maps.
pub fn all_morphisms(x: &FinPreTopSpace, y: &FinPreTopSpace, cap: usize) -> Result<Vec<Vec<usize>>> {
    let total = (y.n() as u128).checked_pow(x.n() as u32).unwrap_or(u128::MAX);
    if total > cap as u128 {
        return Err(Error::BudgetExceeded(format!("{total} candidate maps")));
    }
    let mut out = Vec::new();
    let mut f = vec![0usize; x.n()];
    if x.n() > 0 && y.n() == 0 {
        return Ok(out);
    }
    loop {
        if x.check_morphism(&f, y).is_ok() {
            out.push(f.clone());
        }
        // odometer
        let mut i = 0;
        loop {
            if i == f.len() {
                return Ok(out);
            }
            f[i] += 1;
            if f[i] < y.n() {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// A generated ad-frame on spaces of at most `n` points, deterministic in `seed`.
pub fn generate_frame(family: FrameFamily, n: usize, variant: Variant, seed: u64) -> Result<GeneratedFrame> {
    let mut r = rng(seed);
    let base = |r: &mut ChaCha8Rng, fam: FrameFamily| -> Result<AdFrame> {
        match fam {
            FrameFamily::Ind => {
                let l = random_distributive_lattice(n.max(1), r)?;
                ind_frame(&l, variant)
            }
            _ => {
                let k = r.random_range(0..=n);
                build_ado(&random_space(k, r), variant)
            }
        }
    };
    match family {
        FrameFamily::AdO | FrameFamily::Ind => {
            Ok(GeneratedFrame { frame: base(&mut r, family)?, family, mutation: None })
        }
        FrameFamily::Mutated => {
            let inner = if r.random_bool(0.5) { FrameFamily::AdO } else { FrameFamily::Ind };
            let mut frame = base(&mut r, inner)?;
            let mut options: Vec<(&'static str, RelKind, (usize, usize))> = Vec::new();
            let (ob, ot, lb, lt) = (frame.omega().bot(), frame.omega().top(), frame.ell().bot(), frame.ell().top());
            if variant.has_up() {
                options.push(("tot contains ff", RelKind::Tot, (ob, lt)));
                options.push(("con contains tt", RelKind::Con, (ot, lb)));
            }
            if variant.has_down() {
                options.push(("fof contains (bot, bot)", RelKind::Fof, (ob, lb)));
                options.push(("cou contains (top, top)", RelKind::Cou, (ot, lt)));
            }
            let &(name, kind, (u, a)) = options.choose(&mut r).expect("every variant has options");
            frame.rel_mut(kind).remove(u, a);
            Ok(GeneratedFrame { frame, family, mutation: Some(name) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adframe::validate_adframe;

    #[test]
    fn generation_is_deterministic() {
        let a = random_space(4, &mut rng(7));
        let b = random_space(4, &mut rng(7));
        assert_eq!(a, b);
    }

    #[test]
    fn generated_frames_validate_or_break_as_labeled() {
        for seed in 0..40 {
            for v in Variant::ALL {
                let g = generate_frame(FrameFamily::AdO, 3, v, seed).unwrap();
                assert!(validate_adframe(&g.frame).unwrap().passed());
                let g = generate_frame(FrameFamily::Ind, 3, v, seed).unwrap();
                assert!(validate_adframe(&g.frame).unwrap().passed());
                let g = generate_frame(FrameFamily::Mutated, 3, v, seed).unwrap();
                let r = validate_adframe(&g.frame).unwrap();
                let target = g.mutation.unwrap();
                assert!(r.failures().any(|c| c.name == target), "{target}: {r:?}");
            }
        }
    }

    #[test]
    fn morphism_enumeration_counts() {
        let s = FinPreTopSpace::sierpinski(Preorder::discrete(2));
        // continuous self-maps of Sierpiński: both constants and the identity
        assert_eq!(all_morphisms(&s, &s, 100).unwrap().len(), 3);
        let e = FinPreTopSpace::empty();
        assert_eq!(all_morphisms(&e, &s, 100).unwrap(), vec![Vec::<usize>::new()]);
        assert!(all_morphisms(&s, &e, 100).unwrap().is_empty());
    }
}
