//! An independent resolution of `Γ_S` on trees, built from subsets of the
//! index set of irreducible arrows.

use super::sums::{indicator_morphism, interval_sum, multiset};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::pmod::{ModuleMorphism, PersistenceModule};
use crate::poset::{BracketKind, Interval, Poset};
use std::sync::Arc;

/// The complex `V_m → … → V_1 → V_0 = I_S` indexed by subsets of `𝒦`.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    /// The element behind each member of `𝒦`, ascending. An element of
    /// `min(S)` may occur more than once.
    pub index: Vec<usize>,
    /// Per member of `𝒦`: what it removes from `S` (empty for `𝒥`).
    pub removed: Vec<ElemSet>,
    /// Per member of `𝒦`: what it adds to `S` (empty for `ℐ`).
    pub added: Vec<ElemSet>,
    /// `terms[i]`: the sets `S^σ` for `|σ| = i`, subsets in lexicographic
    /// order of positions in `index`. Empty sets stand for zero summands.
    pub terms: Vec<Vec<ElemSet>>,
    pub modules: Vec<PersistenceModule>,
    /// `differentials[i]: V_{i+1} → V_i`.
    pub differentials: Vec<ModuleMorphism>,
}

impl KoszulComplex {
    pub fn m(&self) -> usize {
        self.index.len()
    }

    /// Length of the resolution `… → V_2 → Γ_S`: the top non-zero level
    /// minus 2, and 0 when `V_2 = 0`.
    pub fn gamma_dim(&self) -> usize {
        let top = (0..self.terms.len())
            .rev()
            .find(|&i| self.terms[i].iter().any(|t| !t.is_empty()))
            .unwrap_or(0);
        top.saturating_sub(2)
    }

    /// Multisets of the non-zero terms `V_2, V_3, …` that resolve `Γ_S`.
    pub fn resolution_terms(&self) -> Vec<Vec<(ElemSet, usize)>> {
        let mut out: Vec<Vec<(ElemSet, usize)>> = self
            .terms
            .iter()
            .skip(2)
            .map(|t| {
                let nz: Vec<ElemSet> = t.iter().filter(|s| !s.is_empty()).cloned().collect();
                multiset(&nz)
            })
            .collect();
        while out.last().is_some_and(Vec::is_empty) {
            out.pop();
        }
        out
    }
}

/// Build and check the complex for an interval `S` of a tree poset.
///
/// `𝒦 = ℐ ⊔ 𝒥` with `𝒥 = {z | S⋖z}` and `ℐ` the pairs `(z, C)` where
/// `z ∈ min(S)`, `C` is a component of `S \ {z}` and
/// `C ∪ ⟨z, C⟨ = S`; such a pair removes `S \ C`. When every such `z` is
/// a leaf of `S` this is `min(S) ∩ leaf(S)`. For `σ ⊆ 𝒦`, `S^σ` removes
/// the parts of `σ ∩ ℐ` and adds `⟩S,z⟩` for `z ∈ σ ∩ 𝒥`. Differentials are
/// alternating sums of indicator maps in the order of `𝒦`.
///
/// `d ∘ d = 0` is asserted, and for `m ≥ 2` also exactness of
/// `V_m → … → V_1`.
pub fn tree_koszul_resolution(p: &Arc<Poset>, field: Field, s: &Interval) -> Result<KoszulComplex> {
    if !p.is_tree() {
        return Err(Error::NotTree);
    }
    let n = p.n();
    let sm = s.members();
    let j_set = p.covers_above(sm);
    let mut members: Vec<(usize, ElemSet, ElemSet)> = Vec::new();
    for z in p.minimal(sm).iter() {
        let zs = ElemSet::singleton(n, z);
        let mut rest = sm.clone();
        rest.remove(z);
        let mut found: Vec<ElemSet> = p
            .components(&rest)
            .into_iter()
            .filter(|c| &c.union(&p.bracket(&zs, c, BracketKind::LeftOpen)) == sm)
            .map(|c| sm.difference(&c))
            .collect();
        found.sort_by(|a, b| a.canonical_cmp(b));
        members.extend(found.into_iter().map(|r| (z, r, p.empty_set())));
    }
    for z in j_set.iter() {
        let zs = ElemSet::singleton(n, z);
        members.push((z, p.empty_set(), p.bracket(sm, &zs, BracketKind::RightOpen)));
    }
    members.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.canonical_cmp(&b.1)));
    let m = members.len();
    if m == 0 {
        return Err(Error::NoOracle("no irreducible arrows end at this interval".into()));
    }
    let s_sigma = |sigma: u32| -> ElemSet {
        let mut t = sm.clone();
        for (pos, (_, rem, add)) in members.iter().enumerate() {
            if sigma >> pos & 1 == 1 {
                t = t.difference(rem);
                t.union_with(add);
            }
        }
        t
    };
    let mut subsets: Vec<Vec<u32>> = vec![Vec::new(); m + 1];
    for sigma in 0u32..(1 << m) {
        subsets[sigma.count_ones() as usize].push(sigma);
    }
    for level in subsets.iter_mut() {
        level.sort_by_key(|&sg| (0..m).filter(|&i| sg >> i & 1 == 1).collect::<Vec<_>>());
    }
    let terms: Vec<Vec<ElemSet>> = subsets
        .iter()
        .map(|lvl| lvl.iter().map(|&sg| s_sigma(sg)).collect())
        .collect();
    for t in terms.iter().flatten() {
        if !t.is_empty() && !p.is_interval(t) {
            return Err(Error::Internal(format!("{} is not an interval", p.fmt_set(t))));
        }
    }
    let modules = terms
        .iter()
        .map(|t| interval_sum(p, field, t))
        .collect::<Result<Vec<_>>>()?;
    let mut differentials = Vec::new();
    for i in 1..=m {
        let (src, tgt) = (&subsets[i], &subsets[i - 1]);
        let coeff = Matrix::from_fn(field, tgt.len(), src.len(), |r, c| {
            let (sg, tg) = (src[c], tgt[r]);
            if tg & !sg != 0 || (sg & !tg).count_ones() != 1 {
                return 0;
            }
            let dropped = (sg & !tg).trailing_zeros();
            let before = (sg & ((1 << dropped) - 1)).count_ones();
            if before % 2 == 0 {
                1
            } else {
                -1
            }
        });
        differentials.push(indicator_morphism(
            &modules[i],
            &terms[i],
            &modules[i - 1],
            &terms[i - 1],
            &coeff,
        )?);
    }
    let cx = KoszulComplex {
        index: members.iter().map(|x| x.0).collect(),
        removed: members.iter().map(|x| x.1.clone()).collect(),
        added: members.iter().map(|x| x.2.clone()).collect(),
        terms,
        modules,
        differentials,
    };
    cx.check_exact()?;
    Ok(cx)
}

impl KoszulComplex {
    fn check_exact(&self) -> Result<()> {
        let d = &self.differentials;
        for w in d.windows(2) {
            if !w[0].compose(&w[1])?.is_zero() {
                return Err(Error::Internal("d∘d ≠ 0 in the Koszul complex".into()));
            }
        }
        if self.m() < 2 {
            // A single arrow: its kernel is Γ_S and nothing further is claimed.
            return Ok(());
        }
        // Exact at V_i for 1 ≤ i ≤ m: ker d_i = im d_{i+1}; d_m injective.
        for i in 1..=self.m() {
            let out = &d[i - 1];
            for x in 0..out.source().poset().n() {
                let ker = out.comp(x).cols() - out.comp(x).rank();
                let im = if i < self.m() { d[i].comp(x).rank() } else { 0 };
                if ker != im {
                    return Err(Error::Internal(format!("Koszul complex not exact at V_{i}")));
                }
            }
        }
        Ok(())
    }
}
