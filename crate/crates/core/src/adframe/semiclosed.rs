use super::{AdFrame, RelKind, Variant};
use crate::error::{Error, Result};

/// Every element of `ell` is a join of second coordinates of `tot ∩ con`.
pub fn check_usc(f: &AdFrame) -> Result<bool> {
    if !f.variant().has_up() {
        return Err(Error::VariantMismatch("usc", "up or both"));
    }
    let l = f.ell();
    let gens = generators(f, RelKind::Tot, RelKind::Con);
    Ok((0..l.len()).all(|a| l.join_all(gens.iter().copied().filter(|&g| l.leq(g, a))) == a))
}

/// Every element of `ell` is a meet of second coordinates of `fof ∩ cou`.
pub fn check_lsc(f: &AdFrame) -> Result<bool> {
    if !f.variant().has_down() {
        return Err(Error::VariantMismatch("lsc", "down or both"));
    }
    let l = f.ell();
    let gens = generators(f, RelKind::Fof, RelKind::Cou);
    Ok((0..l.len()).all(|a| l.meet_all(gens.iter().copied().filter(|&g| l.leq(a, g))) == a))
}

/// Both flags; needs the `Both` variant.
pub fn check_usc_lsc(f: &AdFrame) -> Result<(bool, bool)> {
    if f.variant() != Variant::Both {
        return Err(Error::VariantMismatch("usc and lsc together", "both"));
    }
    Ok((check_usc(f)?, check_lsc(f)?))
}

fn generators(f: &AdFrame, r: RelKind, s: RelKind) -> Vec<usize> {
    let mut gens: Vec<usize> = f.rel(r).intersect(f.rel(s)).pairs().map(|(_, a)| a).collect();
    gens.sort_unstable();
    gens.dedup();
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adframe::build_ado;
    use crate::finord::{FinPreTopSpace, FinTopSpace, Preorder};

    #[test]
    fn terminal_is_semi_closed_both_ways() {
        let f = build_ado(&FinPreTopSpace::terminal(), Variant::Both).unwrap();
        assert_eq!(check_usc_lsc(&f), Ok((true, true)));
    }

    #[test]
    fn discrete_space_is_usc() {
        let s = FinPreTopSpace::new(FinTopSpace::discrete(2), Preorder::discrete(2)).unwrap();
        assert_eq!(check_usc(&build_ado(&s, Variant::Up).unwrap()), Ok(true));
    }

    #[test]
    fn sierpinski_with_reversed_chain() {
        // 1 <= 0: the up-closure of 1 is {0, 1}, closed; the up-closure of 0 is {0}, closed.
        let leq = Preorder::closure_of(2, &[(1, 0)]).unwrap();
        let s = FinPreTopSpace::sierpinski(leq);
        let f = build_ado(&s, Variant::Both).unwrap();
        assert_eq!(check_usc(&f).unwrap(), s.is_upper_semi_closed());
        assert_eq!(check_lsc(&f).unwrap(), s.is_lower_semi_closed());
        assert!(s.is_upper_semi_closed());
        assert!(!s.is_lower_semi_closed());
    }

    #[test]
    fn variant_mismatch() {
        let f = build_ado(&FinPreTopSpace::terminal(), Variant::Down).unwrap();
        assert!(matches!(check_usc(&f), Err(Error::VariantMismatch(..))));
    }
}
