//! Graphviz output: Hasse diagrams of preorders and lattices, and ad-frames
//! as two Hasse diagrams joined by relation edges.

use std::fmt::Write;

use adframe_core::adframe::{AdFrame, RelKind};
use adframe_core::finord::{FinLattice, FinPreTopSpace};
use adframe_core::{Error, Result, Subset};

pub const MAX_NODES: usize = 256;

fn check_size(nodes: usize) -> Result<()> {
    if nodes > MAX_NODES {
        Err(Error::TooLarge { nodes, limit: MAX_NODES })
    } else {
        Ok(())
    }
}

fn set_label(s: Subset) -> String {
    let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn element_label(l: &FinLattice, a: usize) -> String {
    l.label(a).map_or_else(|| a.to_string(), set_label)
}

fn lattice_body(out: &mut String, l: &FinLattice, prefix: &str) {
    for a in 0..l.len() {
        writeln!(out, "    {prefix}{a} [label=\"{}\"];", element_label(l, a)).unwrap();
    }
    for (a, b) in l.covers() {
        writeln!(out, "    {prefix}{a} -> {prefix}{b};").unwrap();
    }
}

/// Hasse diagram with bottom at the bottom: an edge `a -> b` for each cover `a < b`.
pub fn lattice_dot(l: &FinLattice) -> Result<String> {
    check_size(l.len())?;
    let mut out = String::from("digraph lattice {\n    rankdir=BT;\n");
    lattice_body(&mut out, l, "e");
    out.push_str("}\n");
    Ok(out)
}

/// Hasse diagram of the preorder: strict covers as solid edges, equivalent
/// points joined by dashed undirected edges. Opens are listed as comments.
pub fn space_dot(x: &FinPreTopSpace) -> Result<String> {
    check_size(x.n())?;
    let p = x.preorder();
    let n = x.n();
    let mut out = String::from("digraph space {\n    rankdir=BT;\n");
    for i in 0..n {
        writeln!(out, "    p{i} [label=\"{i}\"];").unwrap();
    }
    let strictly = |a: usize, b: usize| p.leq(a, b) && !p.leq(b, a);
    for a in 0..n {
        for b in 0..n {
            if strictly(a, b) && !(0..n).any(|c| strictly(a, c) && strictly(c, b)) {
                writeln!(out, "    p{a} -> p{b};").unwrap();
            }
        }
        // chain each equivalence class through its members in index order
        let class = p.class_of(a);
        if let Some(next) = class.iter().find(|&b| b > a) {
            writeln!(out, "    p{a} -> p{next} [style=dashed, dir=none];").unwrap();
        }
    }
    for (i, u) in x.opens().iter().enumerate() {
        writeln!(out, "    // open {i}: {}", set_label(*u)).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

fn rel_style(k: RelKind) -> &'static str {
    match k {
        RelKind::Tot => "color=red",
        RelKind::Con => "color=red, style=dashed",
        RelKind::Fof => "color=blue",
        RelKind::Cou => "color=blue, style=dashed",
    }
}

/// `omega` and `ell` as two clusters; one styled edge `o_u -> l_a` per
/// relation pair, for the relations the variant reads.
pub fn adframe_dot(f: &AdFrame) -> Result<String> {
    check_size(f.omega().len() + f.ell().len())?;
    let mut out = String::from("digraph adframe {\n    rankdir=BT;\n");
    out.push_str("    subgraph cluster_omega {\n    label=\"omega\";\n");
    lattice_body(&mut out, f.omega(), "o");
    out.push_str("    }\n    subgraph cluster_ell {\n    label=\"ell\";\n");
    lattice_body(&mut out, f.ell(), "l");
    out.push_str("    }\n");
    for &k in f.variant().relations() {
        for (u, a) in f.rel(k).pairs() {
            writeln!(out, "    o{u} -> l{a} [{}, constraint=false, label=\"{}\"];", rel_style(k), k.name()).unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use adframe_core::adframe::{build_ado, Variant};
    use adframe_core::finord::Preorder;

    fn edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    #[test]
    fn two_element_lattice() {
        let d = lattice_dot(&FinLattice::chain(2)).unwrap();
        assert_eq!(d.lines().filter(|l| l.contains("[label=")).count(), 2);
        assert_eq!(edges(&d), 1);
    }

    #[test]
    fn three_chain_drops_the_long_edge() {
        assert_eq!(edges(&lattice_dot(&FinLattice::chain(3)).unwrap()), 2);
    }

    #[test]
    fn ado_of_the_point() {
        let d = adframe_dot(&build_ado(&FinPreTopSpace::terminal(), Variant::Both).unwrap()).unwrap();
        for k in RelKind::ALL {
            let n = d.lines().filter(|l| l.contains(&format!("label=\"{}\"", k.name()))).count();
            assert_eq!(n, 3, "{}", k.name());
        }
        // two cover edges plus twelve relation edges
        assert_eq!(edges(&d), 14);
    }

    #[test]
    fn preorder_with_a_cycle() {
        let p = Preorder::closure_of(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        let d = space_dot(&FinPreTopSpace::new(adframe_core::finord::FinTopSpace::indiscrete(3), p).unwrap()).unwrap();
        assert!(d.contains("p0 -> p1 [style=dashed"));
        assert!(d.contains("p0 -> p2;") && d.contains("p1 -> p2;"));
    }

    #[test]
    fn oversized_lattice_is_refused() {
        assert_eq!(lattice_dot(&FinLattice::chain(300)), Err(Error::TooLarge { nodes: 300, limit: 256 }));
    }

    #[test]
    fn output_is_deterministic() {
        let f = build_ado(&FinPreTopSpace::sierpinski(Preorder::discrete(2)), Variant::Up).unwrap();
        assert_eq!(adframe_dot(&f).unwrap(), adframe_dot(&f).unwrap());
    }
}
