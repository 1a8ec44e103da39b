//! Direct sums of interval modules and the morphisms between them that are
//! scalar combinations of indicator maps.

use crate::bitset::ElemSet;
use crate::error::Result;
use crate::linalg::{Field, Matrix};
use crate::pmod::{ModuleMorphism, PersistenceModule};
use crate::poset::Poset;
use std::sync::Arc;

/// `⊕ I_{S_i}` in the given order.
pub fn interval_sum(p: &Arc<Poset>, field: Field, sets: &[ElemSet]) -> Result<PersistenceModule> {
    let parts = sets
        .iter()
        .map(|s| PersistenceModule::indicator(p.clone(), field, s))
        .collect::<Result<Vec<_>>>()?;
    PersistenceModule::direct_sum(p.clone(), field, &parts)
}

/// Row of each summand inside the fiber at `x`, or `None` when the summand
/// vanishes there.
pub(crate) fn positions(sets: &[ElemSet], x: usize) -> Vec<Option<usize>> {
    let mut k = 0;
    sets.iter()
        .map(|s| {
            s.contains(x).then(|| {
                k += 1;
                k - 1
            })
        })
        .collect()
}

/// The morphism `⊕ I_{S_j} → ⊕ I_{T_i}` whose `(i, j)` block is
/// `coeff[i][j]` times the indicator map on `S_j ∩ T_i`. Naturality is
/// checked.
pub fn indicator_morphism(
    source: &PersistenceModule,
    sources: &[ElemSet],
    target: &PersistenceModule,
    targets: &[ElemSet],
    coeff: &Matrix,
) -> Result<ModuleMorphism> {
    let p = source.poset();
    let f = source.field();
    let comps = (0..p.n())
        .map(|x| {
            let ps = positions(sources, x);
            let pt = positions(targets, x);
            let mut m = Matrix::zeros(f, target.dim(x), source.dim(x));
            for (i, ri) in pt.iter().enumerate() {
                for (j, cj) in ps.iter().enumerate() {
                    if let (Some(r), Some(c)) = (ri, cj) {
                        m.set(*r, *c, coeff.get(i, j));
                    }
                }
            }
            m
        })
        .collect();
    ModuleMorphism::new(source.clone(), target.clone(), comps)
}

/// Multiset of intervals as sorted `(set, count)` pairs.
pub fn multiset(sets: &[ElemSet]) -> Vec<(ElemSet, usize)> {
    let mut v: Vec<ElemSet> = sets.to_vec();
    v.sort_by(|a, b| a.canonical_cmp(b));
    let mut out: Vec<(ElemSet, usize)> = Vec::new();
    for s in v {
        match out.last_mut() {
            Some((t, c)) if *t == s => *c += 1,
            _ => out.push((s, 1)),
        }
    }
    out
}
