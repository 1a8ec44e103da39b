use crate::poset::Poset;
use std::fmt::Write;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering of the Hasse diagram, edges pointing upward in the
/// order.
pub fn to_dot(p: &Poset) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {} {{", quote(p.name())).unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    for l in p.labels() {
        writeln!(s, "  {};", quote(l)).unwrap();
    }
    for &(a, b) in p.covers() {
        writeln!(s, "  {} -> {};", quote(p.label(a)), quote(p.label(b))).unwrap();
    }
    s.push_str("}\n");
    s
}
