use super::sums::{indicator_morphism, interval_sum};
use crate::error::Result;
use crate::linalg::{Field, Matrix};
use crate::pmod::{ModuleMorphism, PersistenceModule};
use crate::poset::{BracketKind, Interval, Poset};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ArrowKind {
    Surjective,
    Injective,
}

/// An irreducible morphism `I_source → I_target` between interval modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleArrow {
    pub source: Interval,
    pub target: Interval,
    pub kind: ArrowKind,
}

impl IrreducibleArrow {
    /// The indicator map: identity on `source ∩ target`, zero elsewhere.
    pub fn morphism(&self, p: &Arc<Poset>, field: Field) -> Result<ModuleMorphism> {
        let s = PersistenceModule::indicator(p.clone(), field, self.source.members())?;
        let t = PersistenceModule::indicator(p.clone(), field, self.target.members())?;
        indicator_morphism(
            &s,
            std::slice::from_ref(self.source.members()),
            &t,
            std::slice::from_ref(self.target.members()),
            &Matrix::identity(field, 1),
        )
    }
}

/// All irreducible morphisms ending at `I_S`.
///
/// Surjective ones come from each `x` with `S⋖x`, with source
/// `S ∪ ⟩S,x⟩`. Injective ones come from `z ∈ min(S)` and a component `C`
/// of `S \ {z}` with `S = C ∪ ⟨z,C⟨`, the bracket taken in `P`. Surjective
/// arrows come first, then canonical order of the source.
pub fn irreducible_arrows(p: &Poset, s: &Interval) -> Vec<IrreducibleArrow> {
    let n = p.n();
    let mut surj = Vec::new();
    for x in p.covers_above(s.members()).iter() {
        let xs = crate::ElemSet::singleton(n, x);
        let t = s.members().union(&p.bracket(s.members(), &xs, BracketKind::RightOpen));
        if let Ok(t) = Interval::new(p, t) {
            surj.push(t);
        }
    }
    let mut inj = Vec::new();
    for z in p.minimal(s.members()).iter() {
        let mut rest = s.members().clone();
        rest.remove(z);
        let zs = crate::ElemSet::singleton(n, z);
        for c in p.components(&rest) {
            let rebuilt = c.union(&p.bracket(&zs, &c, BracketKind::LeftOpen));
            if rebuilt == *s.members() {
                inj.push(Interval::new_unchecked(p, c));
            }
        }
    }
    surj.sort();
    surj.dedup();
    inj.sort();
    inj.dedup();
    let mut out: Vec<IrreducibleArrow> = surj
        .into_iter()
        .map(|t| IrreducibleArrow {
            source: t,
            target: s.clone(),
            kind: ArrowKind::Surjective,
        })
        .collect();
    for t in inj {
        if out.iter().all(|a| a.source != t) {
            out.push(IrreducibleArrow {
                source: t,
                target: s.clone(),
                kind: ArrowKind::Injective,
            });
        }
    }
    out
}

/// `Γ_S = ker(⊕_{α ∈ 𝒜_S} I_{S_α} → I_S)`; zero when there are no arrows.
pub fn gamma(p: &Arc<Poset>, field: Field, s: &Interval) -> Result<PersistenceModule> {
    let arrows = irreducible_arrows(p, s);
    if arrows.is_empty() {
        return Ok(PersistenceModule::zero(p.clone(), field));
    }
    let sources: Vec<_> = arrows.iter().map(|a| a.source.members().clone()).collect();
    let src = interval_sum(p, field, &sources)?;
    let tgt = PersistenceModule::indicator(p.clone(), field, s.members())?;
    let coeff = Matrix::from_fn(field, 1, sources.len(), |_, _| 1);
    let phi = indicator_morphism(&src, &sources, &tgt, std::slice::from_ref(s.members()), &coeff)?;
    Ok(phi.kernel().0)
}
