use super::content_lines;
use crate::error::{Error, Result};
use crate::poset::Poset;
use std::fmt::Write;

/// Parse the line-oriented poset format:
///
/// ```text
/// poset square
/// elements: a b c d
/// cover a b
/// cover a c
/// ```
///
/// Redundant `cover` lines are accepted and reduced away.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = content_lines(text);
    let (l1, head) = lines.next().ok_or_else(|| Error::parse(1, "empty poset file"))?;
    let name = match head.split_whitespace().collect::<Vec<_>>()[..] {
        ["poset", name] => name.to_string(),
        _ => return Err(Error::parse(l1, "expected `poset <name>`")),
    };
    let (l2, elems) = lines
        .next()
        .ok_or_else(|| Error::parse(l1 + 1, "expected `elements:` line"))?;
    let labels: Vec<&str> = match elems.strip_prefix("elements:") {
        Some(rest) => rest.split_whitespace().collect(),
        None => return Err(Error::parse(l2, "expected `elements: ...`")),
    };
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::parse(l2, format!("duplicate element `{l}`")));
        }
    }
    let mut edges = Vec::new();
    for (ln, line) in lines {
        match line.split_whitespace().collect::<Vec<_>>()[..] {
            ["cover", a, b] => {
                for x in [a, b] {
                    if !labels.contains(&x) {
                        return Err(Error::parse(ln, format!("unknown element `{x}`")));
                    }
                }
                edges.push((a, b));
            }
            _ => return Err(Error::parse(ln, "expected `cover <a> <b>`")),
        }
    }
    Poset::from_covers(&name, &labels, &edges)
}

/// Canonical text form: covers in id order.
pub fn write_poset(p: &Poset) -> String {
    let mut s = String::new();
    writeln!(s, "poset {}", p.name()).unwrap();
    writeln!(s, "elements: {}", p.labels().join(" ")).unwrap();
    for &(a, b) in p.covers() {
        writeln!(s, "cover {} {}", p.label(a), p.label(b)).unwrap();
    }
    s
}
