use std::fmt::Write;

use crate::relation::PartialOrder;

/// Cover pairs `(u, v)`: `u > v` with nothing strictly between them.
pub fn hasse_edges(p: &PartialOrder) -> Vec<(String, String)> {
    let n = p.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || !p.holds(u, v) {
                continue;
            }
            let between = (0..n).any(|w| w != u && w != v && p.holds(u, w) && p.holds(w, v));
            if !between {
                edges.push((
                    p.ground().label(u).to_string(),
                    p.ground().label(v).to_string(),
                ));
            }
        }
    }
    edges
}

/// Graphviz digraph of the Hasse diagram, upper elements pointing down.
pub fn export_dot(p: &PartialOrder) -> String {
    let mut out = String::from("digraph poset {\n    rankdir=TB;\n");
    for label in p.ground().labels() {
        writeln!(out, "    \"{label}\";").unwrap();
    }
    for (a, b) in hasse_edges(p) {
        writeln!(out, "    \"{a}\" -> \"{b}\";").unwrap();
    }
    out.push_str("}\n");
    out
}
