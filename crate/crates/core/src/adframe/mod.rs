//! Ad-frames, their homomorphisms, and the constructions `adO` and `Ind`.

mod ado;
mod hom;
mod ind;
mod relation;
mod semiclosed;
mod validate;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finord::FinLattice;

pub use ado::{build_ado, build_ado_hom, ado_hom_between};
pub use hom::{validate_hom, AdFrameHom};
pub use ind::{epsilon_hom, ind_frame, ind_hom};
pub use relation::Relation;
pub use semiclosed::{check_lsc, check_usc, check_usc_lsc};
pub use validate::{validate_adframe, AxiomCheck, Report};

/// Which relations an ad-frame carries: `Up` reads totality and consistency,
/// `Down` containment and inclusion, `Both` all four plus the cross laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Up,
    Down,
    Both,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Up, Variant::Down, Variant::Both];

    pub fn has_up(self) -> bool {
        matches!(self, Variant::Up | Variant::Both)
    }

    pub fn has_down(self) -> bool {
        matches!(self, Variant::Down | Variant::Both)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Up => "up",
            Variant::Down => "down",
            Variant::Both => "both",
        }
    }

    /// Relations this variant reads.
    pub fn relations(self) -> &'static [RelKind] {
        match self {
            Variant::Up => &[RelKind::Tot, RelKind::Con],
            Variant::Down => &[RelKind::Fof, RelKind::Cou],
            Variant::Both => &RelKind::ALL,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s.to_ascii_lowercase().as_str() {
            "up" => Ok(Variant::Up),
            "down" => Ok(Variant::Down),
            "both" => Ok(Variant::Both),
            other => Err(Error::Malformed(format!("unknown variant `{other}`"))),
        }
    }
}

/// The four relations of an ad-frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelKind {
    Tot,
    Con,
    Fof,
    Cou,
}

impl RelKind {
    pub const ALL: [RelKind; 4] = [RelKind::Tot, RelKind::Con, RelKind::Fof, RelKind::Cou];

    pub fn name(self) -> &'static str {
        match self {
            RelKind::Tot => "tot",
            RelKind::Con => "con",
            RelKind::Fof => "fof",
            RelKind::Cou => "cou",
        }
    }
}

/// A frame `omega` and a distributive lattice `ell` related by `tot`, `con`,
/// `fof` and `cou`. Construction does not validate the axioms; see
/// [`validate_adframe`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdFrame {
    omega: FinLattice,
    ell: FinLattice,
    rels: [Relation; 4],
    variant: Variant,
}

impl AdFrame {
    pub fn new(
        omega: FinLattice,
        ell: FinLattice,
        [tot, con, fof, cou]: [Relation; 4],
        variant: Variant,
    ) -> Result<AdFrame> {
        for r in [&tot, &con, &fof, &cou] {
            if r.rows() != omega.len() || r.cols() != ell.len() {
                return Err(Error::Malformed(format!(
                    "relation of shape {}x{} over lattices of sizes {} and {}",
                    r.rows(),
                    r.cols(),
                    omega.len(),
                    ell.len()
                )));
            }
        }
        Ok(AdFrame { omega, ell, rels: [tot, con, fof, cou], variant })
    }

    pub fn omega(&self) -> &FinLattice {
        &self.omega
    }

    pub fn ell(&self) -> &FinLattice {
        &self.ell
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn with_variant(mut self, variant: Variant) -> AdFrame {
        self.variant = variant;
        self
    }

    pub fn rel(&self, kind: RelKind) -> &Relation {
        &self.rels[kind as usize]
    }

    pub fn rel_mut(&mut self, kind: RelKind) -> &mut Relation {
        &mut self.rels[kind as usize]
    }

    pub fn tot(&self) -> &Relation {
        self.rel(RelKind::Tot)
    }

    pub fn con(&self) -> &Relation {
        self.rel(RelKind::Con)
    }

    pub fn fof(&self) -> &Relation {
        self.rel(RelKind::Fof)
    }

    pub fn cou(&self) -> &Relation {
        self.rel(RelKind::Cou)
    }

    /// `ff = (bot, top)`.
    pub fn ff(&self) -> (usize, usize) {
        (self.omega.bot(), self.ell.top())
    }

    /// `tt = (top, bot)`.
    pub fn tt(&self) -> (usize, usize) {
        (self.omega.top(), self.ell.bot())
    }

    /// Information order: componentwise.
    pub fn info_leq(&self, (u, a): (usize, usize), (v, b): (usize, usize)) -> bool {
        self.omega.leq(u, v) && self.ell.leq(a, b)
    }

    /// Logical order: `u <= v` and `a >= b`.
    pub fn logic_leq(&self, (u, a): (usize, usize), (v, b): (usize, usize)) -> bool {
        self.omega.leq(u, v) && self.ell.leq(b, a)
    }

    /// `(u ∧ v, a ∨ b)`.
    pub fn logic_meet(&self, (u, a): (usize, usize), (v, b): (usize, usize)) -> (usize, usize) {
        (self.omega.meet(u, v), self.ell.join(a, b))
    }

    /// `(u ∨ v, a ∧ b)`.
    pub fn logic_join(&self, (u, a): (usize, usize), (v, b): (usize, usize)) -> (usize, usize) {
        (self.omega.join(u, v), self.ell.meet(a, b))
    }

    /// `(u ∧ v, a ∧ b)`.
    pub fn info_meet(&self, (u, a): (usize, usize), (v, b): (usize, usize)) -> (usize, usize) {
        (self.omega.meet(u, v), self.ell.meet(a, b))
    }

    /// `(u ∨ v, a ∨ b)`.
    pub fn info_join(&self, (u, a): (usize, usize), (v, b): (usize, usize)) -> (usize, usize) {
        (self.omega.join(u, v), self.ell.join(a, b))
    }

    pub fn is_trivial(&self) -> bool {
        self.omega.is_trivial()
    }
}
