//! Graphviz output for concept lattices.

use std::fmt::Write;

use crate::classic::ConceptLattice;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// One node per concept with its reduced labels, attributes above entities,
/// and an edge per Hasse cover drawn from the upper concept down. Concepts
/// come in canonical order, so the top is the first node.
pub fn emit_dot(name: &str, l: &ConceptLattice) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    writeln!(out, "  edge [dir=none];").unwrap();
    for (i, label) in l.labels().iter().enumerate() {
        let text = format!("{}\n{}", label.attributes.join(", "), label.entities.join(", "));
        writeln!(out, "  c{i} [label={}];", quote(&text).replace('\n', "\\n")).unwrap();
    }
    let mut covers = l.covers();
    covers.sort_by_key(|&(lower, upper)| (upper, lower));
    for (lower, upper) in covers {
        writeln!(out, "  c{upper} -> c{lower};").unwrap();
    }
    out.push_str("}\n");
    out
}
