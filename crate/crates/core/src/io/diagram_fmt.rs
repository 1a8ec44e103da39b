use super::content_lines;
use crate::error::{Error, Result};
use crate::poset::{Diagram, DiagramEdge, EdgeKind, Orientation};
use std::fmt::Write;

fn parse_orientation(s: &str, line: usize) -> Result<Vec<Orientation>> {
    s.chars()
        .map(|c| match c {
            '>' => Ok(Orientation::Forward),
            '<' => Ok(Orientation::Backward),
            _ => Err(Error::parse(
                line,
                format!("orientation must use `>` and `<`, got `{c}`"),
            )),
        })
        .collect()
}

fn orientation_str(o: &[Orientation]) -> String {
    o.iter()
        .map(|o| match o {
            Orientation::Forward => '>',
            Orientation::Backward => '<',
        })
        .collect()
}

/// Parse a diagram file:
///
/// ```text
/// diagram square
/// vertices: 1 2 3 4
/// darrow 1 2        # equioriented segment, size 2 unless given
/// darrow 1 3 4      # size 4
/// line 2 4 <        # single cover 4 → 2
/// dline 3 4 ><      # segment 3 → · ← 4
/// arrow 2 4
/// ```
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut lines = content_lines(text);
    let (l1, head) = lines.next().ok_or_else(|| Error::parse(1, "empty diagram file"))?;
    let name = match head.split_whitespace().collect::<Vec<_>>()[..] {
        ["diagram", name] => name.to_string(),
        _ => return Err(Error::parse(l1, "expected `diagram <name>`")),
    };
    let (l2, verts) = lines
        .next()
        .ok_or_else(|| Error::parse(l1 + 1, "expected `vertices:` line"))?;
    let vertices: Vec<String> = match verts.strip_prefix("vertices:") {
        Some(rest) => rest.split_whitespace().map(str::to_string).collect(),
        None => return Err(Error::parse(l2, "expected `vertices: ...`")),
    };
    for (i, v) in vertices.iter().enumerate() {
        if vertices[..i].contains(v) {
            return Err(Error::parse(l2, format!("duplicate vertex `{v}`")));
        }
    }
    let look = |ln: usize, x: &str| {
        vertices
            .iter()
            .position(|v| v == x)
            .ok_or_else(|| Error::parse(ln, format!("unknown vertex `{x}`")))
    };
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let (kind, rest) = match toks.first() {
            Some(&"arrow") => (EdgeKind::Arrow, &toks[1..]),
            Some(&"line") => (EdgeKind::Line, &toks[1..]),
            Some(&"darrow") => (EdgeKind::DoubleArrow, &toks[1..]),
            Some(&"dline") => (EdgeKind::DoubleLine, &toks[1..]),
            _ => return Err(Error::parse(ln, "expected `arrow`, `line`, `darrow` or `dline`")),
        };
        if rest.len() < 2 {
            return Err(Error::parse(ln, "edge needs two vertices"));
        }
        let (a, b) = (look(ln, rest[0])?, look(ln, rest[1])?);
        let extra = &rest[2..];
        let (orientation, len) = match (kind, extra) {
            (EdgeKind::Arrow, []) => (Vec::new(), None),
            (EdgeKind::Line, []) | (EdgeKind::DoubleLine, []) => (Vec::new(), None),
            (EdgeKind::Line, [o]) => (parse_orientation(o, ln)?, None),
            (EdgeKind::DoubleLine, [o]) => (parse_orientation(o, ln)?, None),
            (EdgeKind::DoubleArrow, []) => (Vec::new(), None),
            (EdgeKind::DoubleArrow, [m]) => {
                let m = m.parse().map_err(|_| Error::parse(ln, format!("bad length `{m}`")))?;
                (Vec::new(), Some(m))
            }
            _ => return Err(Error::parse(ln, "unexpected trailing tokens")),
        };
        edges.push(DiagramEdge {
            a,
            b,
            kind,
            orientation,
            len,
        });
    }
    Ok(Diagram { name, vertices, edges })
}

/// Canonical text form of a diagram.
pub fn write_diagram(d: &Diagram) -> String {
    let mut s = String::new();
    writeln!(s, "diagram {}", d.name).unwrap();
    writeln!(s, "vertices: {}", d.vertices.join(" ")).unwrap();
    for e in &d.edges {
        let (a, b) = (&d.vertices[e.a], &d.vertices[e.b]);
        let _ = match e.kind {
            EdgeKind::Arrow => writeln!(s, "arrow {a} {b}"),
            EdgeKind::Line | EdgeKind::DoubleLine => {
                let kw = if e.kind == EdgeKind::Line { "line" } else { "dline" };
                if e.orientation.is_empty() {
                    writeln!(s, "{kw} {a} {b}")
                } else {
                    writeln!(s, "{kw} {a} {b} {}", orientation_str(&e.orientation))
                }
            }
            EdgeKind::DoubleArrow => match e.len {
                Some(m) => writeln!(s, "darrow {a} {b} {m}"),
                None => writeln!(s, "darrow {a} {b}"),
            },
        };
    }
    s
}
