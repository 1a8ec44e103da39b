use super::Poset;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};

/// An interval whose Hasse diagram is a path `ℓ_1 - ℓ_2 - … - ℓ_n`, with
/// the degree conditions checked in the ambient poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnSegment {
    elements: Vec<usize>,
    equioriented: bool,
}

impl AnSegment {
    /// Validate an ordered list of elements as a segment of `p`.
    ///
    /// Interior elements must have Hasse degree 2 in `p`. At each end only
    /// the arrow inside the segment is constrained: an outgoing end arrow
    /// forces out-degree 1, an incoming one forces in-degree 1.
    pub fn new(p: &Poset, elements: Vec<usize>) -> Result<AnSegment> {
        let n = elements.len();
        let fail = |msg: &str| Err(Error::NotSegment(msg.to_string()));
        if n < 2 {
            return fail("a segment needs at least 2 elements");
        }
        let set = ElemSet::from_ids(p.n(), elements.iter().copied());
        if set.len() != n {
            return fail("repeated element");
        }
        if !p.is_interval(&set) {
            return fail("not an interval");
        }
        let inner_covers = p
            .covers()
            .iter()
            .filter(|&&(a, b)| set.contains(a) && set.contains(b))
            .count();
        if inner_covers != n - 1 {
            return fail("Hasse diagram of the set is not a path");
        }
        for w in elements.windows(2) {
            if !p.is_cover(w[0], w[1]) && !p.is_cover(w[1], w[0]) {
                return fail("consecutive elements are not joined by a cover");
            }
        }
        for &l in &elements[1..n - 1] {
            if p.degree(l).total() != 2 {
                return fail("interior element has degree other than 2");
            }
        }
        for (end, next) in [(elements[0], elements[1]), (elements[n - 1], elements[n - 2])] {
            let d = p.degree(end);
            let ok = if p.is_cover(end, next) {
                d.outdeg == 1
            } else {
                d.indeg == 1
            };
            if !ok {
                return fail("end element violates the degree condition");
            }
        }
        let equioriented = elements.windows(2).all(|w| p.is_cover(w[0], w[1]));
        Ok(AnSegment { elements, equioriented })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `ℓ_1 → ℓ_2 → … → ℓ_n`.
    pub fn is_equioriented(&self) -> bool {
        self.equioriented
    }

    pub fn first(&self) -> usize {
        self.elements[0]
    }

    pub fn last(&self) -> usize {
        self.elements[self.elements.len() - 1]
    }

    pub fn as_set(&self, n: usize) -> ElemSet {
        ElemSet::from_ids(n, self.elements.iter().copied())
    }

    /// Whether the contraction theorem applies: `n ≥ 4` and either
    /// equioriented or `ℓ_n` a leaf.
    pub fn qualifies(&self, p: &Poset) -> bool {
        self.len() >= 4 && (self.equioriented || p.is_leaf(self.last()))
    }
}

impl Poset {
    /// The path order of an interval whose Hasse diagram is a path, oriented
    /// canonically: ascending if it is a chain, otherwise with a leaf of `P`
    /// last if possible, otherwise with the smaller end id first.
    fn path_order(&self, s: &ElemSet) -> Option<Vec<usize>> {
        let n = s.len();
        let nbrs = |a: usize| self.hasse_neighbors(a).filter(|&b| s.contains(b)).collect::<Vec<_>>();
        let ends: Vec<usize> = s.iter().filter(|&a| nbrs(a).len() <= 1).collect();
        if n == 1 || ends.len() != 2 || s.iter().any(|a| nbrs(a).len() > 2) {
            return None;
        }
        let walk = |start: usize| {
            let mut order = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while order.len() < n {
                let next = nbrs(cur).into_iter().find(|&b| b != prev)?;
                order.push(next);
                prev = cur;
                cur = next;
            }
            Some(order)
        };
        let fwd = walk(ends[0])?;
        let mut rev = fwd.clone();
        rev.reverse();
        let chain = |v: &[usize]| v.windows(2).all(|w| self.is_cover(w[0], w[1]));
        if chain(&fwd) {
            return Some(fwd);
        }
        if chain(&rev) {
            return Some(rev);
        }
        let (a, b) = (ends[0], ends[1]);
        match (self.is_leaf(a), self.is_leaf(b)) {
            (true, false) => Some(rev),
            _ => Some(fwd),
        }
    }

    /// Every segment with at least `min_len` elements, maximal or not, in
    /// canonical interval order.
    pub fn all_an_segments(&self, min_len: usize) -> Vec<AnSegment> {
        let min_len = min_len.max(2);
        self.enumerate_intervals()
            .into_iter()
            .filter(|s| s.len() >= min_len)
            .filter_map(|s| AnSegment::new(self, self.path_order(s.members())?).ok())
            .collect()
    }

    /// Segments with at least `min_len` elements that are not strictly
    /// contained in a larger segment.
    pub fn find_an_segments(&self, min_len: usize) -> Vec<AnSegment> {
        let all = self.all_an_segments(2);
        let sets: Vec<ElemSet> = all.iter().map(|s| s.as_set(self.n())).collect();
        all.iter()
            .enumerate()
            .filter(|(i, seg)| {
                seg.len() >= min_len.max(2)
                    && !sets
                        .iter()
                        .enumerate()
                        .any(|(j, t)| j != *i && sets[*i].is_subset(t) && t.len() > sets[*i].len())
            })
            .map(|(_, s)| s.clone())
            .collect()
    }

    /// Remove `ℓ_4, …, ℓ_n` from the poset.
    pub fn contract_segment(&self, seg: &AnSegment) -> Result<Poset> {
        if seg.len() < 4 {
            return Err(Error::SegmentTooShort(seg.len()));
        }
        // Re-validate against this poset in case the segment came from elsewhere.
        let seg = AnSegment::new(self, seg.elements().to_vec())?;
        if !seg.qualifies(self) {
            return Err(Error::HypothesisUnmet);
        }
        let mut keep = self.full_set();
        for &l in &seg.elements()[3..] {
            keep.remove(l);
        }
        Ok(self.induced(&keep).0)
    }
}
