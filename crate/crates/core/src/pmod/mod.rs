//! Persistence modules over a finite poset: one vector space per element and
//! one matrix per cover.
//!
//! Cover maps have shape `dim(b) × dim(a)` for a cover `a⋖b` and act on
//! column vectors, so composition is left multiplication.

mod decompose;
mod functor;
mod hom;
mod limits;
mod morphism;

pub use decompose::{
    find_isomorphism, is_interval_decomposable, is_isomorphic, same_data, split_interval_summands, SummandList,
};
pub use functor::{coinduct, contract, contract_general, in_essential_image, induct, res, restrict};
pub use hom::{hom_basis, hom_dim, hom_from_interval, hom_interval_components, interval_vector_to_morphism};
pub use limits::{colimit, colimit_over, limit, limit_over, Colimit, Limit};
pub use morphism::ModuleMorphism;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::poset::Poset;
use std::sync::Arc;

/// A pointwise finite-dimensional representation of a finite poset.
///
/// Cheap to clone: dimensions and matrices sit behind shared pointers.
#[derive(Clone, Debug)]
pub struct PersistenceModule {
    poset: Arc<Poset>,
    field: Field,
    dims: Arc<[usize]>,
    maps: Arc<[Matrix]>,
}

impl PersistenceModule {
    /// Validate shapes and commutativity. `maps[i]` belongs to
    /// `poset.covers()[i]`.
    pub fn new(poset: Arc<Poset>, field: Field, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != poset.n() {
            return Err(Error::ShapeMismatch(format!(
                "{} dimensions for {} elements",
                dims.len(),
                poset.n()
            )));
        }
        if maps.len() != poset.covers().len() {
            return Err(Error::ShapeMismatch(format!(
                "{} maps for {} covers",
                maps.len(),
                poset.covers().len()
            )));
        }
        for (&(a, b), m) in poset.covers().iter().zip(&maps) {
            if m.field() != field {
                return Err(Error::FieldMismatch(m.field().p(), field.p()));
            }
            if m.shape() != (dims[b], dims[a]) {
                return Err(Error::ShapeMismatch(format!(
                    "map {} -> {} is {}x{}, expected {}x{}",
                    poset.label(a),
                    poset.label(b),
                    m.rows(),
                    m.cols(),
                    dims[b],
                    dims[a]
                )));
            }
        }
        let m = Self::new_unchecked(poset, field, dims, maps);
        m.check_commutativity()?;
        Ok(m)
    }

    /// Build without the shape and commutativity checks. Useful for
    /// inspecting raw data that may violate them.
    pub fn new_unchecked(poset: Arc<Poset>, field: Field, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        PersistenceModule {
            poset,
            field,
            dims: dims.into(),
            maps: maps.into(),
        }
    }

    pub fn zero(poset: Arc<Poset>, field: Field) -> Self {
        let dims = vec![0; poset.n()];
        let maps = poset.covers().iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Self::new_unchecked(poset, field, dims, maps)
    }

    /// Indicator module of a convex set: `k` on `s`, identities between
    /// members. For a disconnected convex set this is the direct sum of the
    /// interval modules of its components.
    pub fn indicator(poset: Arc<Poset>, field: Field, s: &ElemSet) -> Result<Self> {
        if !poset.is_convex(s) {
            return Err(Error::NotInterval(format!("{} is not convex", poset.fmt_set(s))));
        }
        let dims: Vec<usize> = (0..poset.n()).map(|a| s.contains(a) as usize).collect();
        let maps = poset
            .covers()
            .iter()
            .map(|&(a, b)| {
                let mut m = Matrix::zeros(field, dims[b], dims[a]);
                if dims[a] == 1 && dims[b] == 1 {
                    m.set(0, 0, 1);
                }
                m
            })
            .collect();
        Ok(Self::new_unchecked(poset, field, dims, maps))
    }

    /// Interval module `I_S`.
    pub fn interval(poset: Arc<Poset>, field: Field, s: &ElemSet) -> Result<Self> {
        if !poset.is_interval(s) {
            return Err(Error::NotInterval(poset.fmt_set(s)));
        }
        Self::indicator(poset, field, s)
    }

    /// Simple module at `x`.
    pub fn simple(poset: Arc<Poset>, field: Field, x: usize) -> Self {
        let s = ElemSet::singleton(poset.n(), x);
        Self::indicator(poset, field, &s).expect("singletons are intervals")
    }

    /// Indecomposable projective `I_{x^↑}`.
    pub fn projective(poset: Arc<Poset>, field: Field, x: usize) -> Self {
        let s = poset.up(x).clone();
        Self::indicator(poset, field, &s).expect("principal upsets are intervals")
    }

    /// Indecomposable injective `I_{x^↓}`.
    pub fn injective(poset: Arc<Poset>, field: Field, x: usize) -> Self {
        let s = poset.down(x).clone();
        Self::indicator(poset, field, &s).expect("principal downsets are intervals")
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self, a: usize) -> usize {
        self.dims[a]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn support(&self) -> ElemSet {
        ElemSet::from_ids(self.poset.n(), (0..self.poset.n()).filter(|&a| self.dims[a] > 0))
    }

    /// Matrices in cover order.
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// The matrix on the cover `a⋖b`, if it is one.
    pub fn cover_map(&self, a: usize, b: usize) -> Option<&Matrix> {
        self.poset.cover_index(a, b).map(|i| &self.maps[i])
    }

    /// `M(a ≤ b)` along the canonical path, which steps to the smallest-id
    /// upper cover still below `b`.
    pub fn path_map(&self, a: usize, b: usize) -> Result<Matrix> {
        let p = &self.poset;
        if !p.leq(a, b) {
            return Err(Error::NotComparable(p.label(a).into(), p.label(b).into()));
        }
        let mut acc = Matrix::identity(self.field, self.dims[a]);
        let mut cur = a;
        while cur != b {
            let next = p
                .upper_covers(cur)
                .iter()
                .copied()
                .find(|&c| p.leq(c, b))
                .expect("some upper cover lies below b");
            acc = self.cover_map(cur, next).unwrap().mul(&acc);
            cur = next;
        }
        Ok(acc)
    }

    /// Verify that all path composites agree.
    ///
    /// For each `a < b` and each upper cover `c` of `a` below `b`, the path
    /// through `c` followed canonically must equal the canonical composite.
    /// Induction on path length then covers every path.
    pub fn check_commutativity(&self) -> Result<()> {
        let p = &self.poset;
        for a in 0..p.n() {
            for b in p.up(a).iter() {
                if b == a || p.is_cover(a, b) {
                    continue;
                }
                let canon = self.path_map(a, b)?;
                for &c in p.upper_covers(a) {
                    if p.leq(c, b) {
                        let alt = self.path_map(c, b)?.mul(self.cover_map(a, c).unwrap());
                        if alt != canon {
                            return Err(Error::NonCommutativeModule(p.label(a).into(), p.label(b).into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        self.check_commutativity().is_ok()
    }

    /// Exhaustive check over every cover path; exponential, for
    /// self-testing on small posets.
    pub fn check_commutativity_all_paths(&self) -> Result<()> {
        let p = &self.poset;
        for a in 0..p.n() {
            for b in p.up(a).iter() {
                let mut composites: Vec<Matrix> = Vec::new();
                let mut stack = vec![(a, Matrix::identity(self.field, self.dims[a]))];
                while let Some((cur, acc)) = stack.pop() {
                    if cur == b {
                        composites.push(acc);
                        continue;
                    }
                    for &c in p.upper_covers(cur) {
                        if p.leq(c, b) {
                            stack.push((c, self.cover_map(cur, c).unwrap().mul(&acc)));
                        }
                    }
                }
                if composites.windows(2).any(|w| w[0] != w[1]) {
                    return Err(Error::NonCommutativeModule(p.label(a).into(), p.label(b).into()));
                }
            }
        }
        Ok(())
    }

    /// Whether the module lives over the same poset and field.
    pub fn compatible(&self, other: &PersistenceModule) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        if !(Arc::ptr_eq(&self.poset, &other.poset) || self.poset.same_shape(&other.poset)) {
            return Err(Error::PosetMismatch);
        }
        Ok(())
    }

    /// Block-diagonal direct sum in the given order.
    pub fn direct_sum(poset: Arc<Poset>, field: Field, parts: &[PersistenceModule]) -> Result<Self> {
        let zero = Self::zero(poset.clone(), field);
        for m in parts {
            zero.compatible(m)?;
        }
        let dims = (0..poset.n()).map(|a| parts.iter().map(|m| m.dims[a]).sum()).collect();
        let maps = (0..poset.covers().len())
            .map(|i| Matrix::block_diag(field, &parts.iter().map(|m| m.maps[i].clone()).collect::<Vec<_>>()))
            .collect();
        Ok(Self::new_unchecked(poset, field, dims, maps))
    }

    /// Direct sum with its injections and projections.
    pub fn direct_sum_with_maps(
        poset: Arc<Poset>,
        field: Field,
        parts: &[PersistenceModule],
    ) -> Result<(Self, Vec<ModuleMorphism>, Vec<ModuleMorphism>)> {
        let sum = Self::direct_sum(poset.clone(), field, parts)?;
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut offset = vec![0usize; poset.n()];
        for m in parts {
            let mut ic = Vec::new();
            let mut pc = Vec::new();
            for a in 0..poset.n() {
                let mut i = Matrix::zeros(field, sum.dims[a], m.dims[a]);
                i.set_block(offset[a], 0, &Matrix::identity(field, m.dims[a]));
                pc.push(i.transpose());
                ic.push(i);
                offset[a] += m.dims[a];
            }
            inj.push(ModuleMorphism::new_unchecked(m.clone(), sum.clone(), ic));
            proj.push(ModuleMorphism::new_unchecked(sum.clone(), m.clone(), pc));
        }
        Ok((sum, inj, proj))
    }

    /// Change of basis: `(g_a)` invertible, new maps `g_b M(e) g_a^{-1}`.
    pub fn transport(&self, basis_change: &[Matrix]) -> Result<Self> {
        let inv = basis_change
            .iter()
            .map(|g| {
                g.inverse()
                    .ok_or_else(|| Error::ShapeMismatch("basis change not invertible".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let maps = self
            .poset
            .covers()
            .iter()
            .zip(self.maps.iter())
            .map(|(&(a, b), m)| basis_change[b].mul(m).mul(&inv[a]))
            .collect();
        Ok(Self::new_unchecked(
            self.poset.clone(),
            self.field,
            self.dims.to_vec(),
            maps,
        ))
    }

    /// Same module viewed over another copy of the same poset.
    pub fn rebase(&self, poset: Arc<Poset>) -> Result<Self> {
        if !poset.same_shape(&self.poset) {
            return Err(Error::PosetMismatch);
        }
        Ok(Self::new_unchecked(
            poset,
            self.field,
            self.dims.to_vec(),
            self.maps.to_vec(),
        ))
    }
}

/// Equality of data; the posets must have the same shape.
impl PartialEq for PersistenceModule {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.poset.same_shape(&other.poset)
            && self.dims == other.dims
            && self.maps == other.maps
    }
}

impl Eq for PersistenceModule {}

#[cfg(test)]
mod tests;
