//! Diagrams with double edges standing for whole `A_m` segments.

use super::Poset;
use crate::error::{Error, Result};
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// A single cover `a → b`.
    Arrow,
    /// A single cover with a chosen orientation.
    Line,
    /// An equioriented `A_m` segment from `a` to `b`.
    DoubleArrow,
    /// An `A_m` segment with one orientation per step.
    DoubleLine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Points from the edge's first vertex towards its second.
    Forward,
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramEdge {
    pub a: usize,
    pub b: usize,
    pub kind: EdgeKind,
    /// Step orientations from `a` towards `b`; one for a line, `m - 1` for a
    /// double line, ignored for arrows.
    pub orientation: Vec<Orientation>,
    /// Segment size `m` for double edges; defaults to 2.
    pub len: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<DiagramEdge>,
}

/// Substitute every double edge by its segment and every line by its
/// oriented cover. `lengths` overrides segment sizes by edge index.
///
/// New vertices inside the segment for edge `a`-`b` are named `a.b.1`,
/// `a.b.2`, … counting from `a`.
pub fn expand_diagram(d: &Diagram, lengths: &HashMap<usize, usize>) -> Result<Poset> {
    let mut labels = d.vertices.clone();
    let mut covers: Vec<(usize, usize)> = Vec::new();
    for (i, e) in d.edges.iter().enumerate() {
        let (la, lb) = (&d.vertices[e.a], &d.vertices[e.b]);
        let steps: Vec<Orientation> = match e.kind {
            EdgeKind::Arrow => vec![Orientation::Forward],
            EdgeKind::Line => {
                if e.orientation.len() != 1 {
                    return Err(Error::UnorientedLine(la.clone(), lb.clone()));
                }
                e.orientation.clone()
            }
            EdgeKind::DoubleArrow | EdgeKind::DoubleLine => {
                let implied =
                    (e.kind == EdgeKind::DoubleLine && !e.orientation.is_empty()).then(|| e.orientation.len() + 1);
                let m = lengths.get(&i).copied().or(e.len).or(implied).unwrap_or(2);
                if m < 2 {
                    return Err(Error::InvalidLength(la.clone(), lb.clone(), m));
                }
                if e.kind == EdgeKind::DoubleArrow {
                    vec![Orientation::Forward; m - 1]
                } else if e.orientation.len() == m - 1 {
                    e.orientation.clone()
                } else {
                    return Err(Error::UnorientedLine(la.clone(), lb.clone()));
                }
            }
        };
        let mut chain = vec![e.a];
        for k in 1..steps.len() {
            chain.push(labels.len());
            labels.push(format!("{la}.{lb}.{k}"));
        }
        chain.push(e.b);
        for (w, o) in chain.windows(2).zip(&steps) {
            covers.push(match o {
                Orientation::Forward => (w[0], w[1]),
                Orientation::Backward => (w[1], w[0]),
            });
        }
    }
    let mut seen = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if seen.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    let p = Poset::from_id_edges(&d.name, labels, &covers)?;
    let mut sorted = covers.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != covers.len() || sorted != p.covers() {
        return Err(Error::NotHasse(
            "expanded edges contain a repeated or transitive edge".into(),
        ));
    }
    Ok(p)
}

impl Diagram {
    /// Every way of filling in the unspecified orientations with all double
    /// edges at size `m`. Edges that already carry an orientation keep it.
    /// The count is `2^k` for `k` free steps, so keep diagrams small.
    pub fn instantiations(&self, m: usize) -> Vec<Diagram> {
        let mut base = self.clone();
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, e) in base.edges.iter_mut().enumerate() {
            let steps = match e.kind {
                EdgeKind::Arrow => 0,
                EdgeKind::Line => 1,
                EdgeKind::DoubleArrow => {
                    e.len = Some(m);
                    0
                }
                EdgeKind::DoubleLine => {
                    e.len = Some(m);
                    m.saturating_sub(1)
                }
            };
            if steps > 0 && e.orientation.len() != steps {
                e.orientation = vec![Orientation::Forward; steps];
                free.extend((0..steps).map(|k| (i, k)));
            }
        }
        (0u64..1 << free.len())
            .map(|mask| {
                let mut d = base.clone();
                for (bit, &(i, k)) in free.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        d.edges[i].orientation[k] = Orientation::Backward;
                    }
                }
                d
            })
            .collect()
    }
}
