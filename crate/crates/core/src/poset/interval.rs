use super::Poset;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::HashSet;

/// A non-empty convex connected subset with its minimal and maximal
/// elements cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    members: ElemSet,
    min: ElemSet,
    max: ElemSet,
}

impl Interval {
    pub fn new(p: &Poset, s: ElemSet) -> Result<Interval> {
        if s.is_empty() {
            return Err(Error::NotInterval("empty set".into()));
        }
        if !p.is_convex(&s) {
            return Err(Error::NotInterval(format!("{} is not convex", p.fmt_set(&s))));
        }
        if !p.is_connected(&s) {
            return Err(Error::NotInterval(format!("{} is not connected", p.fmt_set(&s))));
        }
        Ok(Self::new_unchecked(p, s))
    }

    pub fn from_labels<S: AsRef<str>>(p: &Poset, labels: &[S]) -> Result<Interval> {
        Self::new(p, p.subset(labels)?)
    }

    pub(crate) fn new_unchecked(p: &Poset, s: ElemSet) -> Interval {
        debug_assert!(p.is_interval(&s));
        Interval {
            min: p.minimal(&s),
            max: p.maximal(&s),
            members: s,
        }
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn into_members(self) -> ElemSet {
        self.members
    }

    pub fn min_set(&self) -> &ElemSet {
        &self.min
    }

    pub fn max_set(&self) -> &ElemSet {
        &self.max
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }
}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical interval order: size first, then sorted member ids.
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.canonical_cmp(&other.members)
    }
}

/// The three bracket constructions on pairs of subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    /// `⟨A,B⟩ = A^↑ ∩ B^↓`
    Closed,
    /// `⟨A,B⟨ = A^↑ \ B^↑`
    LeftOpen,
    /// `⟩A,B⟩ = B^↓ \ A^↓`
    RightOpen,
}

impl Poset {
    /// Every interval exactly once, in canonical order.
    ///
    /// Grows from singletons: each step adds one Hasse neighbour and takes the
    /// convex hull. Every interval is reached this way because its Hasse
    /// diagram is connected and hulls of its subsets stay inside it.
    pub fn enumerate_intervals(&self) -> Vec<Interval> {
        let n = self.n();
        let mut seen: HashSet<ElemSet> = HashSet::new();
        let mut frontier: Vec<ElemSet> = (0..n).map(|a| ElemSet::singleton(n, a)).collect();
        seen.extend(frontier.iter().cloned());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in &frontier {
                let mut nbrs = self.empty_set();
                for a in s {
                    for b in self.hasse_neighbors(a) {
                        nbrs.insert(b);
                    }
                }
                for b in nbrs.difference(s).iter() {
                    let mut t = s.clone();
                    t.insert(b);
                    let t = self.hull(&t);
                    if !seen.contains(&t) {
                        seen.insert(t.clone());
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
        let mut all: Vec<Interval> = seen.into_iter().map(|s| Interval::new_unchecked(self, s)).collect();
        all.sort();
        all
    }

    /// `{y | S⋖y}`: elements of `S^↑ \ S` all of whose strict lower bounds in
    /// `S^↑` lie in `S`.
    pub fn covers_above(&self, s: &ElemSet) -> ElemSet {
        let up = self.upset(s);
        let mut out = self.empty_set();
        for y in up.difference(s).iter() {
            let below = self.down(y).intersection(&up);
            let mut below = below;
            below.remove(y);
            if below.is_subset(s) {
                out.insert(y);
            }
        }
        out
    }

    /// Dual of [`Poset::covers_above`].
    pub fn covers_below(&self, s: &ElemSet) -> ElemSet {
        let down = self.downset(s);
        let mut out = self.empty_set();
        for y in down.difference(s).iter() {
            let mut above = self.up(y).intersection(&down);
            above.remove(y);
            if above.is_subset(s) {
                out.insert(y);
            }
        }
        out
    }

    pub fn bracket(&self, a: &ElemSet, b: &ElemSet, kind: BracketKind) -> ElemSet {
        match kind {
            BracketKind::Closed => self.upset(a).intersection(&self.downset(b)),
            BracketKind::LeftOpen => self.upset(a).difference(&self.upset(b)),
            BracketKind::RightOpen => self.downset(b).difference(&self.downset(a)),
        }
    }
}
