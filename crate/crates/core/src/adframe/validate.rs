use serde::Serialize;

use super::{AdFrame, Relation};
use crate::error::{Error, Result};
use crate::finord::FinLattice;

/// Outcome of one axiom or law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// A list of named checks, each with a witness when it fails.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<AxiomCheck>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, witness: Option<String>) {
        self.checks.push(AxiomCheck { name: name.into(), passed: witness.is_none(), witness });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.failures().next()
    }
}

/// Up to this many pairs in `omega × ell`, the validator also runs the
/// directed-family oracle for Scott-closedness.
const SCOTT_ORACLE_LIMIT: usize = 64;

#[derive(Clone, Copy)]
enum Dir {
    Up,
    Down,
}

struct Covers {
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl Covers {
    fn of(l: &FinLattice) -> Covers {
        let mut upper = vec![Vec::new(); l.len()];
        let mut lower = vec![Vec::new(); l.len()];
        for (a, b) in l.covers() {
            upper[a].push(b);
            lower[b].push(a);
        }
        Covers { upper, lower }
    }

    fn step(&self, d: Dir) -> &[Vec<usize>] {
        match d {
            Dir::Up => &self.upper,
            Dir::Down => &self.lower,
        }
    }
}

fn pair(p: (usize, usize)) -> String {
    format!("({}, {})", p.0, p.1)
}

/// Checks every axiom the frame's variant reads. Fails outright only when a
/// lattice is not distributive.
pub fn validate_adframe(f: &AdFrame) -> Result<Report> {
    if !f.omega().is_distributive() {
        return Err(Error::NonDistributiveLattice("omega"));
    }
    if !f.ell().is_distributive() {
        return Err(Error::NonDistributiveLattice("ell"));
    }
    let co = Covers::of(f.omega());
    let cl = Covers::of(f.ell());
    let mut report = Report::default();
    let v = f.variant();
    let bb = (f.omega().bot(), f.ell().bot());
    let tt_ = (f.omega().top(), f.ell().top());

    if v.has_up() {
        let tot = f.tot();
        let con = f.con();
        report.push("tot is info-upwards-closed", closure_violation(tot, &co, &cl, Dir::Up, Dir::Up));
        report.push("tot contains ff", missing(tot, f.ff(), "ff"));
        report.push("tot contains tt", missing(tot, f.tt(), "tt"));
        report.push("tot closed under logical meet", binary_violation(tot, |p, q| f.logic_meet(p, q)));
        report.push("tot closed under logical join", binary_violation(tot, |p, q| f.logic_join(p, q)));
        report.push("con is info-downwards-closed", closure_violation(con, &co, &cl, Dir::Down, Dir::Down));
        if f.omega().len() * f.ell().len() <= SCOTT_ORACLE_LIMIT {
            report.push(
                "con is info-Scott-closed (directed-family oracle)",
                scott_oracle(f, con, |p, q| f.info_leq(p, q), |p, q| f.info_join(p, q)),
            );
        }
        report.push("con contains ff", missing(con, f.ff(), "ff"));
        report.push("con contains tt", missing(con, f.tt(), "tt"));
        report.push("con closed under logical meet", binary_violation(con, |p, q| f.logic_meet(p, q)));
        report.push("con closed under logical join", binary_violation(con, |p, q| f.logic_join(p, q)));
        report.push(
            "con below tot on shared coordinates",
            interaction_violation(con, tot, |p, q| f.info_leq(p, q)),
        );
    }
    if v.has_down() {
        let fof = f.fof();
        let cou = f.cou();
        report.push("fof is logic-upwards-closed", closure_violation(fof, &co, &cl, Dir::Up, Dir::Down));
        report.push("fof contains (bot, bot)", missing(fof, bb, "(bot, bot)"));
        report.push("fof contains (top, top)", missing(fof, tt_, "(top, top)"));
        report.push("fof closed under info meet", binary_violation(fof, |p, q| f.info_meet(p, q)));
        report.push("fof closed under info join", binary_violation(fof, |p, q| f.info_join(p, q)));
        report.push("cou is logic-downwards-closed", closure_violation(cou, &co, &cl, Dir::Down, Dir::Up));
        if f.omega().len() * f.ell().len() <= SCOTT_ORACLE_LIMIT {
            report.push(
                "cou is logic-Scott-closed (directed-family oracle)",
                scott_oracle(f, cou, |p, q| f.logic_leq(p, q), |p, q| f.logic_join(p, q)),
            );
        }
        report.push("cou contains (bot, bot)", missing(cou, bb, "(bot, bot)"));
        report.push("cou contains (top, top)", missing(cou, tt_, "(top, top)"));
        report.push("cou closed under info meet", binary_violation(cou, |p, q| f.info_meet(p, q)));
        report.push("cou closed under info join", binary_violation(cou, |p, q| f.info_join(p, q)));
        report.push(
            "cou below fof on shared coordinates",
            interaction_violation(cou, fof, |p, q| f.logic_leq(p, q)),
        );
    }
    if v.has_up() && v.has_down() {
        let (o, l) = (f.omega(), f.ell());
        report.push(
            "con ∩ cou forces u = bot",
            cross_violation(f.con(), f.cou(), |u, _| u == o.bot(), "u is not bot"),
        );
        report.push(
            "tot ∩ fof forces u = top",
            cross_violation(f.tot(), f.fof(), |u, _| u == o.top(), "u is not top"),
        );
        report.push(
            "con ∩ fof forces a = bot",
            cross_violation(f.con(), f.fof(), |_, a| a == l.bot(), "a is not bot"),
        );
        report.push(
            "tot ∩ cou forces a = top",
            cross_violation(f.tot(), f.cou(), |_, a| a == l.top(), "a is not top"),
        );
    }
    Ok(report)
}

fn missing(r: &Relation, p: (usize, usize), name: &str) -> Option<String> {
    (!r.contains(p.0, p.1)).then(|| format!("{name} = {} is missing", pair(p)))
}

/// Closure under one covering step in each coordinate, in the given directions.
fn closure_violation(r: &Relation, co: &Covers, cl: &Covers, du: Dir, da: Dir) -> Option<String> {
    for (u, a) in r.pairs() {
        for &v in &co.step(du)[u] {
            if !r.contains(v, a) {
                return Some(format!("{} present but {} missing", pair((u, a)), pair((v, a))));
            }
        }
        for &b in &cl.step(da)[a] {
            if !r.contains(u, b) {
                return Some(format!("{} present but {} missing", pair((u, a)), pair((u, b))));
            }
        }
    }
    None
}

fn binary_violation(r: &Relation, op: impl Fn((usize, usize), (usize, usize)) -> (usize, usize)) -> Option<String> {
    let pairs: Vec<(usize, usize)> = r.pairs().collect();
    for (i, &p) in pairs.iter().enumerate() {
        for &q in &pairs[i..] {
            let c = op(p, q);
            if !r.contains(c.0, c.1) {
                return Some(format!("{} and {} present but {} missing", pair(p), pair(q), pair(c)));
            }
        }
    }
    None
}

/// `lo` member `p`, `hi` member `q` agreeing in a coordinate must satisfy `leq(p, q)`.
fn interaction_violation(
    lo: &Relation,
    hi: &Relation,
    leq: impl Fn((usize, usize), (usize, usize)) -> bool,
) -> Option<String> {
    for (u, a) in lo.pairs() {
        let same_u = hi.row(u).map(|b| (u, b));
        let same_a = hi.col(a).map(|v| (v, a));
        for q in same_u.chain(same_a) {
            if !leq((u, a), q) {
                return Some(format!("{} in the lower relation, {} in the upper", pair((u, a)), pair(q)));
            }
        }
    }
    None
}

fn cross_violation(r: &Relation, s: &Relation, ok: impl Fn(usize, usize) -> bool, what: &str) -> Option<String> {
    r.intersect(s)
        .pairs()
        .find(|&(u, a)| !ok(u, a))
        .map(|p| format!("{} in both relations but {what}", pair(p)))
}

/// Scott-closedness by definition: downward closure over the full order, and
/// membership of the join of every directed subfamily. Finite directed
/// families are enumerated up to size three, or exhaustively for small relations.
fn scott_oracle(
    f: &AdFrame,
    r: &Relation,
    leq: impl Fn((usize, usize), (usize, usize)) -> bool,
    join: impl Fn((usize, usize), (usize, usize)) -> (usize, usize),
) -> Option<String> {
    let all: Vec<(usize, usize)> =
        (0..f.omega().len()).flat_map(|u| (0..f.ell().len()).map(move |a| (u, a))).collect();
    let members: Vec<(usize, usize)> = r.pairs().collect();
    for &p in &members {
        if let Some(&q) = all.iter().find(|&&q| leq(q, p) && !r.contains(q.0, q.1)) {
            return Some(format!("{} present but {} below it missing", pair(p), pair(q)));
        }
    }
    let directed = |family: &[(usize, usize)]| {
        family
            .iter()
            .all(|&p| family.iter().all(|&q| family.iter().any(|&z| leq(p, z) && leq(q, z))))
    };
    let check = |family: &[(usize, usize)]| -> Option<String> {
        if family.is_empty() || !directed(family) {
            return None;
        }
        let s = family[1..].iter().fold(family[0], |acc, &p| join(acc, p));
        (!r.contains(s.0, s.1)).then(|| format!("directed family {family:?} has join {} outside", pair(s)))
    };
    let k = members.len();
    if k <= 10 {
        for mask in 1u32..(1 << k) {
            let fam: Vec<_> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| members[i]).collect();
            if let Some(w) = check(&fam) {
                return Some(w);
            }
        }
    } else {
        for i in 0..k {
            for j in i..k {
                for l in j..k {
                    if let Some(w) = check(&[members[i], members[j], members[l]]) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adframe::{build_ado, RelKind, Variant};
    use crate::finord::{FinPreTopSpace, FinTopSpace, Preorder};

    #[test]
    fn ado_of_terminal_is_valid() {
        for v in Variant::ALL {
            let f = build_ado(&FinPreTopSpace::terminal(), v).unwrap();
            let r = validate_adframe(&f).unwrap();
            assert!(r.passed(), "{v}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn inserting_top_top_into_con_breaks_a_cross_law() {
        let mut f = build_ado(&FinPreTopSpace::terminal(), Variant::Both).unwrap();
        f.rel_mut(RelKind::Con).insert(1, 1);
        let r = validate_adframe(&f).unwrap();
        let names: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert!(names.contains(&"con ∩ fof forces a = bot"), "{names:?}");
    }

    #[test]
    fn empty_tot_misses_ff() {
        let s = FinPreTopSpace::sierpinski(Preorder::discrete(2));
        let mut f = build_ado(&s, Variant::Up).unwrap();
        let (m, l) = (f.omega().len(), f.ell().len());
        *f.rel_mut(RelKind::Tot) = Relation::empty(m, l);
        let r = validate_adframe(&f).unwrap();
        assert_eq!(r.first_failure().unwrap().name, "tot contains ff");
    }

    #[test]
    fn non_distributive_lattice_is_an_error() {
        let m3 = FinLattice::from_order(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        let two = FinLattice::chain(2);
        let f = AdFrame::new(
            m3,
            two,
            std::array::from_fn(|_| Relation::full(5, 2)),
            Variant::Both,
        )
        .unwrap();
        assert_eq!(validate_adframe(&f), Err(Error::NonDistributiveLattice("omega")));
    }

    #[test]
    fn ado_of_a_three_point_space_is_valid() {
        let leq = Preorder::closure_of(3, &[(0, 1)]).unwrap();
        let top = FinTopSpace::new(3, vec![crate::Subset(0b100)], true).unwrap();
        let s = FinPreTopSpace::new(top, leq).unwrap();
        let r = validate_adframe(&build_ado(&s, Variant::Both).unwrap()).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
    }
}
