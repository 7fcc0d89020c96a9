//! JSON interchange for spaces, lattices and ad-frames.
//!
//! Subsets are sorted integer arrays; order pairs are two-element arrays.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::adframe::{AdFrame, RelKind, Relation, Variant};
use crate::error::{Error, Result};
use crate::finord::{validate_space, FinLattice, FinPreTopSpace, RawSpace};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
    #[serde(default)]
    pub leq: Vec<[usize; 2]>,
    #[serde(default)]
    pub complete: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeJson {
    /// Needed only when no order pair mentions the largest index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    pub leq: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdFrameJson {
    pub omega: LatticeJson,
    pub ell: LatticeJson,
    pub tot: Vec<[usize; 2]>,
    pub con: Vec<[usize; 2]>,
    pub fof: Vec<[usize; 2]>,
    pub cou: Vec<[usize; 2]>,
    #[serde(default = "default_variant")]
    pub variant: Variant,
}

fn default_variant() -> Variant {
    Variant::Both
}

fn pairs(p: impl IntoIterator<Item = (usize, usize)>) -> Vec<[usize; 2]> {
    p.into_iter().map(|(a, b)| [a, b]).collect()
}

fn unpairs(p: &[[usize; 2]]) -> Vec<(usize, usize)> {
    p.iter().map(|&[a, b]| (a, b)).collect()
}

pub fn space_to_json(x: &FinPreTopSpace) -> SpaceJson {
    SpaceJson {
        points: x.n(),
        opens: x.opens().iter().map(|u| u.to_vec()).collect(),
        leq: pairs(x.preorder().strict_pairs()),
        complete: false,
        strict: false,
    }
}

pub fn space_from_json(j: &SpaceJson) -> Result<FinPreTopSpace> {
    validate_space(&RawSpace {
        points: j.points,
        opens: j.opens.clone(),
        leq: unpairs(&j.leq),
        complete: j.complete,
        strict: j.strict,
    })
}

pub fn lattice_to_json(l: &FinLattice) -> LatticeJson {
    LatticeJson {
        size: Some(l.len()),
        leq: pairs(l.order_pairs()),
        labels: l.labels().map(|ls| ls.iter().map(|s| s.to_vec()).collect()),
    }
}

pub fn lattice_from_json(j: &LatticeJson) -> Result<FinLattice> {
    let from_pairs = j.leq.iter().flat_map(|p| p.iter()).map(|&i| i + 1).max().unwrap_or(0);
    let from_labels = j.labels.as_ref().map_or(0, Vec::len);
    let size = j.size.unwrap_or(from_pairs.max(from_labels));
    let l = FinLattice::from_order(size, &unpairs(&j.leq))?;
    match &j.labels {
        None => Ok(l),
        Some(ls) => l.with_labels(ls.iter().map(|s| Subset::from_points(s.iter().copied())).collect()),
    }
}

pub fn adframe_to_json(f: &AdFrame) -> AdFrameJson {
    AdFrameJson {
        omega: lattice_to_json(f.omega()),
        ell: lattice_to_json(f.ell()),
        tot: pairs(f.tot().pairs()),
        con: pairs(f.con().pairs()),
        fof: pairs(f.fof().pairs()),
        cou: pairs(f.cou().pairs()),
        variant: f.variant(),
    }
}

pub fn adframe_from_json(j: &AdFrameJson) -> Result<AdFrame> {
    let omega = lattice_from_json(&j.omega)?;
    let ell = lattice_from_json(&j.ell)?;
    let (m, l) = (omega.len(), ell.len());
    let rel = |kind: RelKind, p: &[[usize; 2]]| {
        Relation::from_pairs(m, l, &unpairs(p)).map_err(|(u, a)| {
            Error::Malformed(format!("{} pair ({u}, {a}) outside {m}x{l}", kind.name()))
        })
    };
    let rels = [
        rel(RelKind::Tot, &j.tot)?,
        rel(RelKind::Con, &j.con)?,
        rel(RelKind::Fof, &j.fof)?,
        rel(RelKind::Cou, &j.cou)?,
    ];
    AdFrame::new(omega, ell, rels, j.variant)
}

fn malformed(e: serde_json::Error) -> Error {
    Error::Malformed(e.to_string())
}

pub fn parse_space(text: &str) -> Result<FinPreTopSpace> {
    space_from_json(&serde_json::from_str(text).map_err(malformed)?)
}

pub fn parse_lattice(text: &str) -> Result<FinLattice> {
    lattice_from_json(&serde_json::from_str(text).map_err(malformed)?)
}

pub fn parse_adframe(text: &str) -> Result<AdFrame> {
    adframe_from_json(&serde_json::from_str(text).map_err(malformed)?)
}

pub fn space_value(x: &FinPreTopSpace) -> Value {
    serde_json::to_value(space_to_json(x)).expect("plain data")
}

pub fn adframe_value(f: &AdFrame) -> Value {
    serde_json::to_value(adframe_to_json(f)).expect("plain data")
}

pub fn lattice_value(l: &FinLattice) -> Value {
    serde_json::to_value(lattice_to_json(l)).expect("plain data")
}

/// Which object a JSON document describes, judged by its keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocKind {
    Space,
    Lattice,
    AdFrame,
}

pub fn detect_kind(v: &Value) -> Result<DocKind> {
    let obj = v.as_object().ok_or_else(|| Error::Malformed("expected a JSON object".into()))?;
    if obj.contains_key("points") {
        Ok(DocKind::Space)
    } else if obj.contains_key("omega") {
        Ok(DocKind::AdFrame)
    } else if obj.contains_key("leq") {
        Ok(DocKind::Lattice)
    } else {
        Err(Error::Malformed("object is neither a space, a lattice nor an ad-frame".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adframe::build_ado;
    use crate::finord::Preorder;

    #[test]
    fn space_round_trip() {
        let chain = Preorder::closure_of(2, &[(0, 1)]).unwrap();
        let s = FinPreTopSpace::sierpinski(chain);
        let text = serde_json::to_string(&space_to_json(&s)).unwrap();
        assert_eq!(text, r#"{"points":2,"opens":[[],[1],[0,1]],"leq":[[0,1]],"complete":false}"#);
        assert_eq!(parse_space(&text).unwrap(), s);
    }

    #[test]
    fn adframe_round_trip() {
        let f = build_ado(&FinPreTopSpace::sierpinski(Preorder::discrete(2)), Variant::Down).unwrap();
        let text = serde_json::to_string(&adframe_to_json(&f)).unwrap();
        assert_eq!(parse_adframe(&text).unwrap(), f);
    }

    #[test]
    fn abstract_lattice_round_trip() {
        let c = FinLattice::chain(3);
        let text = serde_json::to_string(&lattice_to_json(&c)).unwrap();
        assert_eq!(parse_lattice(&text).unwrap(), c);
        assert_eq!(parse_lattice(r#"{"leq":[[0,1],[1,2]]}"#).unwrap(), c);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse_space("{"), Err(Error::Malformed(_))));
        assert!(matches!(parse_space(r#"{"points":1,"opens":[[]],"bogus":1}"#), Err(Error::Malformed(_))));
    }
}
