//! Finite posets stored as closed order relations with their Hasse covers.

mod diagram;
mod interior;
mod interval;
mod segment;

pub use diagram::{expand_diagram, Diagram, DiagramEdge, EdgeKind, Orientation};
pub use interior::InteriorSystem;
pub use interval::{BracketKind, Interval};
pub use segment::AnSegment;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};
use std::fmt;

/// A finite poset on element ids `0..n`.
///
/// The order is kept as principal up- and down-sets; covers are the
/// transitive reduction, sorted lexicographically by `(lower, upper)`.
#[derive(Clone)]
pub struct Poset {
    name: String,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    covers: Vec<(usize, usize)>,
    cover_index: HashMap<(usize, usize), usize>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

/// In- and out-degree of an element in the Hasse diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degree {
    pub indeg: usize,
    pub outdeg: usize,
}

impl Degree {
    pub fn total(self) -> usize {
        self.indeg + self.outdeg
    }
}

/// Build a poset from named elements and generating relations `a < b`.
pub fn poset_from_covers<S: AsRef<str>>(name: &str, labels: &[S], edges: &[(S, S)]) -> Result<Poset> {
    Poset::from_covers(name, labels, edges)
}

impl Poset {
    /// Build from labels and generating edges given by label. Redundant
    /// edges are dropped; ids follow label order.
    pub fn from_covers<S: AsRef<str>>(name: &str, labels: &[S], edges: &[(S, S)]) -> Result<Poset> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::UnknownLabel(String::new()));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let look = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownLabel(s.to_string()));
        let ids = edges
            .iter()
            .map(|(a, b)| Ok((look(a.as_ref())?, look(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_id_edges(name, labels, &ids)
    }

    /// Build from labels and generating edges given by id.
    pub fn from_id_edges(name: &str, labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut up: Vec<ElemSet> = (0..n).map(|i| ElemSet::singleton(n, i)).collect();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge endpoint out of range");
            if a == b {
                return Err(Error::CycleDetected(labels[a].clone(), labels[b].clone()));
            }
            adj[a].push(b);
        }
        // Reachability by DFS from each vertex.
        for s in 0..n {
            let mut stack = adj[s].clone();
            while let Some(v) = stack.pop() {
                if !up[s].contains(v) {
                    up[s].insert(v);
                    stack.extend(adj[v].iter().copied());
                }
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(Error::CycleDetected(labels[a].clone(), labels[b].clone()));
                }
            }
        }
        Ok(Self::from_upsets(name, labels, up))
    }

    /// Build from principal up-sets of a relation already known to be a
    /// partial order.
    fn from_upsets(name: &str, labels: Vec<String>, up: Vec<ElemSet>) -> Poset {
        let n = labels.len();
        let mut down: Vec<ElemSet> = (0..n).map(|_| ElemSet::empty(n)).collect();
        for a in 0..n {
            for b in up[a].iter() {
                down[b].insert(a);
            }
        }
        let mut covers = Vec::new();
        for a in 0..n {
            for b in up[a].iter() {
                if b == a {
                    continue;
                }
                // a⋖b iff no z with a<z<b
                let between = up[a].intersection(&down[b]);
                if between.len() == 2 {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        let mut cover_index = HashMap::new();
        for (i, &(a, b)) in covers.iter().enumerate() {
            succ[a].push(b);
            pred[b].push(a);
            cover_index.insert((a, b), i);
        }
        for v in pred.iter_mut() {
            v.sort_unstable();
        }
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Poset {
            name: name.to_string(),
            labels,
            index,
            up,
            down,
            covers,
            cover_index,
            succ,
            pred,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Poset {
        self.name = name.to_string();
        self
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn id_of(&self, label: &str) -> Result<usize> {
        self.id(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Parse a set of labels into a subset.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet> {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(self.id_of(l.as_ref())?);
        }
        Ok(s)
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.n())
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.n())
    }

    pub fn set_labels(&self, s: &ElemSet) -> Vec<String> {
        s.iter().map(|a| self.labels[a].clone()).collect()
    }

    /// `{a,b,c}` using labels.
    pub fn fmt_set(&self, s: &ElemSet) -> String {
        format!("{{{}}}", self.set_labels(s).join(","))
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Principal up-set `a^↑`.
    pub fn up(&self, a: usize) -> &ElemSet {
        &self.up[a]
    }

    /// Principal down-set `a^↓`.
    pub fn down(&self, a: usize) -> &ElemSet {
        &self.down[a]
    }

    /// Cover pairs `(a, b)` with `a⋖b`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_index(&self, a: usize, b: usize) -> Option<usize> {
        self.cover_index.get(&(a, b)).copied()
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.cover_index.contains_key(&(a, b))
    }

    /// Elements covering `a`, ascending.
    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.succ[a]
    }

    /// Elements covered by `a`, ascending.
    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.pred[a]
    }

    pub fn hasse_neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.pred[a].iter().chain(&self.succ[a]).copied()
    }

    pub fn upset(&self, s: &ElemSet) -> ElemSet {
        let mut u = self.empty_set();
        for a in s {
            u.union_with(&self.up[a]);
        }
        u
    }

    pub fn downset(&self, s: &ElemSet) -> ElemSet {
        let mut d = self.empty_set();
        for a in s {
            d.union_with(&self.down[a]);
        }
        d
    }

    /// Convex hull `S^↑ ∩ S^↓`.
    pub fn hull(&self, s: &ElemSet) -> ElemSet {
        self.upset(s).intersection(&self.downset(s))
    }

    pub fn is_convex(&self, s: &ElemSet) -> bool {
        self.hull(s) == *s
    }

    /// Connected in the comparability graph restricted to `s`; the empty
    /// set counts as connected.
    pub fn is_connected(&self, s: &ElemSet) -> bool {
        self.components(s).len() <= 1
    }

    pub fn is_interval(&self, s: &ElemSet) -> bool {
        !s.is_empty() && self.is_convex(s) && self.is_connected(s)
    }

    pub fn is_upset(&self, s: &ElemSet) -> bool {
        self.upset(s) == *s
    }

    pub fn is_downset(&self, s: &ElemSet) -> bool {
        self.downset(s) == *s
    }

    /// Connected components of `s` under comparability, ordered by their
    /// smallest id.
    pub fn components(&self, s: &ElemSet) -> Vec<ElemSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for start in s {
            if seen.contains(start) {
                continue;
            }
            let mut comp = self.empty_set();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                let nbrs = self.up[v].union(&self.down[v]).intersection(s).difference(&seen);
                for w in nbrs.iter() {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Whether the Hasse diagram of the whole poset is connected.
    pub fn is_poset_connected(&self) -> bool {
        self.is_connected(&self.full_set())
    }

    pub fn minimal(&self, s: &ElemSet) -> ElemSet {
        let mut m = self.empty_set();
        for a in s {
            if self.down[a].intersection(s).len() == 1 {
                m.insert(a);
            }
        }
        m
    }

    pub fn maximal(&self, s: &ElemSet) -> ElemSet {
        let mut m = self.empty_set();
        for a in s {
            if self.up[a].intersection(s).len() == 1 {
                m.insert(a);
            }
        }
        m
    }

    pub fn degree(&self, a: usize) -> Degree {
        Degree {
            indeg: self.pred[a].len(),
            outdeg: self.succ[a].len(),
        }
    }

    pub fn degree_stats(&self) -> Vec<Degree> {
        (0..self.n()).map(|a| self.degree(a)).collect()
    }

    /// Elements with no lower covers.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.n()).filter(|&a| self.pred[a].is_empty()).collect()
    }

    /// Elements with no upper covers.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n()).filter(|&a| self.succ[a].is_empty()).collect()
    }

    /// Elements of total Hasse degree one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&a| self.degree(a).total() == 1).collect()
    }

    pub fn is_leaf(&self, a: usize) -> bool {
        self.degree(a).total() == 1
    }

    /// Hasse diagram is a tree (connected, `n-1` covers).
    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.is_poset_connected() && self.covers.len() == self.n() - 1
    }

    /// The opposite poset; labels and ids are preserved.
    pub fn opposite(&self) -> Poset {
        let name = format!("{}_op", self.name);
        Self::from_upsets(&name, self.labels.clone(), self.down.clone())
    }

    /// The full subposet on `q`, with ids renumbered in ascending order.
    /// Returns the poset and the map from new ids to old ids.
    pub fn induced(&self, q: &ElemSet) -> (Poset, Vec<usize>) {
        let keep = q.to_vec();
        let m = keep.len();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &a) in keep.iter().enumerate() {
            pos[a] = i;
        }
        let up = keep
            .iter()
            .map(|&a| ElemSet::from_ids(m, self.up[a].intersection(q).iter().map(|b| pos[b])))
            .collect();
        let labels = keep.iter().map(|&a| self.labels[a].clone()).collect();
        (Self::from_upsets(&self.name, labels, up), keep)
    }

    /// Reverse every cover at a sink or source, then re-close and re-reduce.
    pub fn reflect(&self, a: usize) -> Result<Poset> {
        let d = self.degree(a);
        if d.indeg > 0 && d.outdeg > 0 {
            return Err(Error::NotExtremal(self.labels[a].clone()));
        }
        let edges: Vec<(usize, usize)> = self
            .covers
            .iter()
            .map(|&(x, y)| if x == a || y == a { (y, x) } else { (x, y) })
            .collect();
        Self::from_id_edges(&self.name, self.labels.clone(), &edges)
    }

    /// Whether `a` is a sink (or, dually, a source) with `m ∈ {1, 2}`
    /// Hasse neighbours whose removal leaves exactly `m` components. Under
    /// this condition reflecting at `a` keeps the global dimension.
    pub fn mutation_hypothesis(&self, a: usize) -> bool {
        let d = self.degree(a);
        let m = match (d.indeg, d.outdeg) {
            (m, 0) | (0, m) => m,
            _ => return false,
        };
        let mut rest = self.full_set();
        rest.remove(a);
        (1..=2).contains(&m) && self.components(&rest).len() == m
    }

    /// Same labels and the same cover relation.
    pub fn same_shape(&self, other: &Poset) -> bool {
        self.labels == other.labels && self.covers == other.covers
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.same_shape(other)
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        write!(f, "Poset({}; {})", self.name, covers.join(" "))
    }
}
