use super::Poset;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use std::sync::Arc;

/// A full subposet `Q ⊆ P` whose inclusion has a right adjoint, the floor
/// `x ↦ max{y ∈ Q | y ≤ x}`.
///
/// `Q` is also materialised as its own [`Poset`] with ids renumbered in
/// ascending order of the ambient ids. Subsets of `Q` passed to or returned
/// from this type use that renumbering unless the name says otherwise.
#[derive(Clone, Debug)]
pub struct InteriorSystem {
    ambient: Arc<Poset>,
    sub: ElemSet,
    sub_poset: Arc<Poset>,
    q_to_p: Vec<usize>,
    p_to_q: Vec<Option<usize>>,
    floor: Vec<usize>,
    fibers: Vec<ElemSet>,
    aligned: bool,
    nu: Option<Vec<usize>>,
}

impl InteriorSystem {
    /// Check that `q` is an interior system of `p` and compute floors, fibers
    /// and alignment.
    pub fn new(p: Arc<Poset>, q: &ElemSet) -> Result<InteriorSystem> {
        if p.n() == 0 || q.is_empty() {
            return Err(Error::NotInteriorSystem("<empty Q>".into()));
        }
        let (sub_poset, q_to_p) = p.induced(q);
        let mut p_to_q = vec![None; p.n()];
        for (i, &a) in q_to_p.iter().enumerate() {
            p_to_q[a] = Some(i);
        }
        let mut floor = Vec::with_capacity(p.n());
        for x in 0..p.n() {
            let cand = p.down(x).intersection(q);
            let top = cand.iter().find(|&m| cand.is_subset(p.down(m)));
            match top {
                Some(m) => floor.push(p_to_q[m].unwrap()),
                None => return Err(Error::NotInteriorSystem(p.label(x).to_string())),
            }
        }
        let mut fibers = vec![p.empty_set(); q_to_p.len()];
        for (x, &y) in floor.iter().enumerate() {
            fibers[y].insert(x);
        }
        let mut sys = InteriorSystem {
            ambient: p,
            sub: q.clone(),
            sub_poset: Arc::new(sub_poset),
            q_to_p,
            p_to_q,
            floor,
            fibers,
            aligned: false,
            nu: None,
        };
        let by_filtered = sys.aligned_by_filtered_downfibers();
        let by_al = sys.aligned_by_al1_al2();
        if by_filtered != by_al {
            return Err(Error::Internal("the two alignment characterisations disagree".into()));
        }
        sys.aligned = by_filtered;
        if sys.aligned {
            let p = &sys.ambient;
            let nu = sys
                .fibers
                .iter()
                .map(|f| {
                    f.iter()
                        .find(|&m| f.is_subset(p.down(m)))
                        .ok_or_else(|| Error::Internal("aligned fiber without maximum".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            sys.nu = Some(nu);
        }
        Ok(sys)
    }

    /// Every pair in the set has an upper bound inside it.
    fn is_filtered(&self, s: &ElemSet) -> bool {
        let p = &self.ambient;
        let v = s.to_vec();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| p.up(a).intersection(p.up(b)).intersects(s)))
    }

    fn aligned_by_filtered_downfibers(&self) -> bool {
        (0..self.q_len()).all(|y| self.is_filtered(&self.down_fiber(y)))
    }

    fn aligned_by_al1_al2(&self) -> bool {
        let p = &self.ambient;
        (0..self.q_len()).all(|y| {
            let fib = &self.fibers[y];
            let al1 = self.down_fiber(y) == p.downset(fib);
            al1 && self.is_filtered(fib)
        })
    }

    pub fn ambient(&self) -> &Arc<Poset> {
        &self.ambient
    }

    /// `Q` as a poset in its own right.
    pub fn sub_poset(&self) -> &Arc<Poset> {
        &self.sub_poset
    }

    /// `Q` as a subset of the ambient poset.
    pub fn sub_set(&self) -> &ElemSet {
        &self.sub
    }

    pub fn q_len(&self) -> usize {
        self.q_to_p.len()
    }

    /// Ambient id of the `Q`-element `y`.
    pub fn q_to_p(&self, y: usize) -> usize {
        self.q_to_p[y]
    }

    /// `Q`-id of an ambient element, if it lies in `Q`.
    pub fn p_to_q(&self, x: usize) -> Option<usize> {
        self.p_to_q[x]
    }

    /// Floor of the ambient element `x`, as a `Q`-id.
    pub fn floor(&self, x: usize) -> usize {
        self.floor[x]
    }

    /// Fiber `⌈y⌉_Q` as an ambient subset.
    pub fn fiber(&self, y: usize) -> &ElemSet {
        &self.fibers[y]
    }

    /// `⌈y^↓⌉_Q = {a | floor(a) ≤ y}` as an ambient subset.
    pub fn down_fiber(&self, y: usize) -> ElemSet {
        let q = &self.sub_poset;
        let mut s = self.ambient.empty_set();
        for z in q.down(y).iter() {
            s.union_with(&self.fibers[z]);
        }
        s
    }

    pub fn is_aligned(&self) -> bool {
        self.aligned
    }

    /// Maximum of the fiber over `y` (ambient id); aligned systems only.
    pub fn nu(&self, y: usize) -> Result<usize> {
        self.nu.as_ref().map(|v| v[y]).ok_or(Error::NotAligned)
    }

    /// Map a `Q`-subset to the ambient ids.
    pub fn lift_set(&self, s: &ElemSet) -> ElemSet {
        ElemSet::from_ids(self.ambient.n(), s.iter().map(|y| self.q_to_p[y]))
    }

    /// Map an ambient subset contained in `Q` to `Q`-ids.
    ///
    /// # Panics
    ///
    /// Panics if some member lies outside `Q`.
    pub fn restrict_set(&self, s: &ElemSet) -> ElemSet {
        ElemSet::from_ids(
            self.q_len(),
            s.iter().map(|x| self.p_to_q[x].expect("element outside Q")),
        )
    }

    /// `⌈S⌉_Q`: the union of fibers over a `Q`-subset, as an ambient subset.
    pub fn ceil_preimage(&self, s: &ElemSet) -> ElemSet {
        let mut out = self.ambient.empty_set();
        for y in s {
            out.union_with(&self.fibers[y]);
        }
        out
    }

    /// `{x ∈ Q | T ∩ ⌈x⌉ non-empty and an upset of ⌈x⌉}` for an ambient
    /// subset `T`, returned in `Q`-ids. The result is convex in `Q` but may be
    /// disconnected.
    pub fn tbar(&self, t: &ElemSet) -> Result<ElemSet> {
        if !self.aligned {
            return Err(Error::NotAligned);
        }
        let p = &self.ambient;
        let mut out = ElemSet::empty(self.q_len());
        for (y, fib) in self.fibers.iter().enumerate() {
            let part = t.intersection(fib);
            if !part.is_empty() && p.upset(&part).intersection(fib) == part {
                out.insert(y);
            }
        }
        if !self.sub_poset.is_convex(&out) {
            return Err(Error::Internal("tbar produced a non-convex set".into()));
        }
        Ok(out)
    }
}
