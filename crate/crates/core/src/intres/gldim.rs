use super::irreducible::gamma;
use super::resolution::intresdim;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::poset::{AnSegment, Interval, Poset};
use rayon::prelude::*;
use std::sync::Arc;

/// Outcome of a global dimension computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GldimReport {
    pub gldim: usize,
    /// First interval in canonical order attaining the maximum.
    pub witness: Interval,
    /// `intresdim Γ_S` for every interval, in canonical order.
    pub per_interval: Vec<(Interval, usize)>,
}

/// `max_S intresdim Γ_S` over GF(2).
pub fn intresgldim(p: &Poset) -> Result<GldimReport> {
    intresgldim_over(p, Field::GF2)
}

/// `max_S intresdim Γ_S` over the given field. Intervals are processed in
/// parallel on the ambient rayon pool; the result does not depend on the
/// schedule.
pub fn intresgldim_over(p: &Poset, field: Field) -> Result<GldimReport> {
    if p.n() == 0 {
        return Err(Error::EmptyPoset);
    }
    if !p.is_poset_connected() {
        return Err(Error::Disconnected);
    }
    let p = Arc::new(p.clone());
    let intervals = p.enumerate_intervals();
    let dims: Vec<usize> = intervals
        .par_iter()
        .map(|s| intresdim(&gamma(&p, field, s)?))
        .collect::<Result<_>>()?;
    let gldim = dims.iter().copied().max().unwrap_or(0);
    let w = dims.iter().position(|&d| d == gldim).unwrap_or(0);
    Ok(GldimReport {
        gldim,
        witness: intervals[w].clone(),
        per_interval: intervals.into_iter().zip(dims).collect(),
    })
}

/// `#leaves − 2`, at least 0, for posets whose Hasse diagram is a tree.
pub fn tree_gldim(p: &Poset) -> Result<usize> {
    if !p.is_tree() {
        return Err(Error::NotTree);
    }
    Ok(p.leaves().len().saturating_sub(2))
}

/// One applied contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionStep {
    /// Segment labels `ℓ_1 … ℓ_n` in the poset before the step.
    pub segment: Vec<String>,
    pub equioriented: bool,
    /// Labels removed (`ℓ_4 … ℓ_n`).
    pub removed: Vec<String>,
}

/// Repeatedly remove `ℓ_4 … ℓ_n` from a qualifying segment (`n ≥ 4`,
/// equioriented or ending in a leaf), longest first, then compute the
/// global dimension of what is left.
pub fn gldim_via_contraction(p: &Poset) -> Result<(usize, Vec<ContractionStep>, Poset)> {
    if !p.is_poset_connected() {
        return Err(Error::Disconnected);
    }
    let mut cur = p.clone();
    let mut trace = Vec::new();
    while let Some(seg) = pick_segment(&cur) {
        let labels: Vec<String> = seg.elements().iter().map(|&a| cur.label(a).to_string()).collect();
        let next = cur.contract_segment(&seg)?;
        trace.push(ContractionStep {
            removed: labels[3..].to_vec(),
            segment: labels,
            equioriented: seg.is_equioriented(),
        });
        cur = next;
    }
    let d = intresgldim(&cur)?.gldim;
    Ok((d, trace, cur))
}

fn pick_segment(p: &Poset) -> Option<AnSegment> {
    let mut best: Option<AnSegment> = None;
    for seg in p.all_an_segments(4) {
        if seg.qualifies(p) && best.as_ref().is_none_or(|b| seg.len() > b.len()) {
            best = Some(seg);
        }
    }
    best
}

/// Whether every proper full subposet has smaller global dimension than
/// `d`, and `P` itself has dimension `d`.
///
/// Dimension is monotone under passing to full subposets, so deleting
/// single elements suffices. A deletion that disconnects `P` is judged
/// componentwise.
pub fn is_minimal_m(p: &Poset, d: usize) -> Result<bool> {
    if intresgldim(p)?.gldim != d {
        return Ok(false);
    }
    for a in 0..p.n() {
        let mut keep = p.full_set();
        keep.remove(a);
        if keep.is_empty() {
            continue;
        }
        for comp in p.components(&keep) {
            let (sub, _) = p.induced(&comp);
            if intresgldim(&sub)?.gldim >= d {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
