//! DOT export of the Hasse diagram, rank-aligned by level, with
//! optional down-set/up-set highlighting. Byte-deterministic: vertices
//! and edges are emitted in the canonical lexicographic order.

use std::fmt::Write as _;

use bgposet::{HassePoset, LengthVector};

pub const DOWNSET_FILL: &str = "lightblue";
pub const UPSET_FILL: &str = "lightsalmon";
pub const BOTH_FILL: &str = "palegreen";

fn node_id(v: &LengthVector) -> String {
    let [l1, l2, l3, l4] = v.coords();
    format!("v{l1}_{l2}_{l3}_{l4}")
}

fn node_label(v: &LengthVector) -> String {
    let [l1, l2, l3, l4] = v.coords();
    let coords = format!("({l1},{l2},{l3},{l4})");
    match v.permutation().digit_word() {
        Some(word) => format!("{word}\\n{coords}"),
        None => coords,
    }
}

/// Renders the cover digraph. `downset` / `upset` highlight every
/// vertex weakly below / above the given element.
pub fn render(
    poset: &HassePoset,
    downset: Option<&LengthVector>,
    upset: Option<&LengthVector>,
) -> String {
    let n = poset.order();
    let mut out = String::new();
    writeln!(out, "digraph bg_{n} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"Helvetica\"];").unwrap();
    for v in poset.vertices() {
        let below = downset.is_some_and(|d| v.leq(d).unwrap_or(false));
        let above = upset.is_some_and(|u| u.leq(v).unwrap_or(false));
        let fill = match (below, above) {
            (true, true) => Some(BOTH_FILL),
            (true, false) => Some(DOWNSET_FILL),
            (false, true) => Some(UPSET_FILL),
            (false, false) => None,
        };
        match fill {
            Some(color) => writeln!(
                out,
                "  {} [label=\"{}\", style=filled, fillcolor={}];",
                node_id(v),
                node_label(v),
                color
            )
            .unwrap(),
            None => writeln!(out, "  {} [label=\"{}\"];", node_id(v), node_label(v)).unwrap(),
        }
    }
    for level in 0..=n - 2 {
        let members: Vec<String> = poset
            .vertices()
            .iter()
            .filter(|v| v.level() == level)
            .map(node_id)
            .collect();
        writeln!(out, "  {{ rank=same; {}; }}", members.join("; ")).unwrap();
    }
    for (i, j) in poset.edges() {
        writeln!(
            out,
            "  {} -> {};",
            node_id(&poset.vertex(i)),
            node_id(&poset.vertex(j))
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
