//! Kernels, cokernels, images, and finite (co)limits.

use super::{ModuleMorphism, PersistenceModule};
use crate::bitset::ElemSet;
use crate::linalg::{Field, Matrix};

/// Projection onto `k^n / span(cols of a)` and a section of it.
///
/// The quotient coordinates are the non-pivot coordinates after reducing
/// modulo the echelon basis of the column space.
pub(crate) fn quotient(a: &Matrix) -> (Matrix, Matrix) {
    let f = a.field();
    let n = a.rows();
    let (r, pivots) = a.transpose().row_reduce();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
    // π = S_free (I - Rᵀ S_piv)
    let mut reducer = Matrix::identity(f, n);
    for (i, &p) in pivots.iter().enumerate() {
        for j in 0..n {
            let v = reducer.get(j, p);
            reducer.set(j, p, f.sub(v, r.get(i, j)));
        }
    }
    let proj = reducer.select_rows(&free);
    let mut section = Matrix::zeros(f, n, free.len());
    for (c, &i) in free.iter().enumerate() {
        section.set(i, c, 1);
    }
    (proj, section)
}

pub(crate) fn kernel(phi: &ModuleMorphism) -> (PersistenceModule, ModuleMorphism) {
    let src = phi.source();
    let p = src.poset();
    let f = src.field();
    let incl: Vec<Matrix> = phi.comps().iter().map(|c| c.nullspace_basis()).collect();
    let maps = p
        .covers()
        .iter()
        .zip(src.maps())
        .map(|(&(a, b), m)| incl[b].solve(&m.mul(&incl[a])).expect("cover maps preserve kernels"))
        .collect();
    let dims = incl.iter().map(|k| k.cols()).collect();
    let k = PersistenceModule::new_unchecked(p.clone(), f, dims, maps);
    let i = ModuleMorphism::new_unchecked(k.clone(), src.clone(), incl);
    (k, i)
}

pub(crate) fn cokernel(phi: &ModuleMorphism) -> (PersistenceModule, ModuleMorphism) {
    let tgt = phi.target();
    let p = tgt.poset();
    let f = tgt.field();
    let qs: Vec<(Matrix, Matrix)> = phi.comps().iter().map(quotient).collect();
    let maps = p
        .covers()
        .iter()
        .zip(tgt.maps())
        .map(|(&(a, b), m)| qs[b].0.mul(m).mul(&qs[a].1))
        .collect();
    let dims = qs.iter().map(|q| q.0.rows()).collect();
    let c = PersistenceModule::new_unchecked(p.clone(), f, dims, maps);
    let proj = ModuleMorphism::new_unchecked(tgt.clone(), c.clone(), qs.into_iter().map(|q| q.0).collect());
    (c, proj)
}

pub(crate) fn image(phi: &ModuleMorphism) -> (PersistenceModule, ModuleMorphism) {
    let tgt = phi.target();
    let p = tgt.poset();
    let f = tgt.field();
    let incl: Vec<Matrix> = phi.comps().iter().map(|c| c.image_basis()).collect();
    let maps = p
        .covers()
        .iter()
        .zip(tgt.maps())
        .map(|(&(a, b), m)| incl[b].solve(&m.mul(&incl[a])).expect("cover maps preserve images"))
        .collect();
    let dims = incl.iter().map(|k| k.cols()).collect();
    let im = PersistenceModule::new_unchecked(p.clone(), f, dims, maps);
    let i = ModuleMorphism::new_unchecked(im.clone(), tgt.clone(), incl);
    (im, i)
}

/// Cover relations of the full subposet on `d`, with their `P`-maps.
fn sub_relations(m: &PersistenceModule, d: &ElemSet) -> Vec<(usize, usize, Matrix)> {
    let p = m.poset();
    let mut out = Vec::new();
    for a in d {
        for b in p.up(a).intersection(d).iter() {
            if b == a {
                continue;
            }
            let between = p.up(a).intersection(p.down(b)).intersection(d);
            if between.len() == 2 {
                out.push((a, b, m.path_map(a, b).expect("a ≤ b")));
            }
        }
    }
    out
}

fn offsets(m: &PersistenceModule, d: &ElemSet) -> (Vec<usize>, usize) {
    let mut off = vec![usize::MAX; m.poset().n()];
    let mut total = 0;
    for a in d {
        off[a] = total;
        total += m.dim(a);
    }
    (off, total)
}

/// Colimit of a diagram over a full subposet, as a quotient of
/// `⊕_{a ∈ D} M(a)`.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub dim: usize,
    offsets: Vec<usize>,
    dims: Vec<usize>,
    /// `dim × Σ dim M(a)`
    pub proj: Matrix,
    /// Right inverse of `proj` supported on standard basis vectors.
    pub section: Matrix,
}

impl Colimit {
    /// Cocone map `M(a) → colim`.
    pub fn cocone(&self, a: usize) -> Matrix {
        let o = self.offsets[a];
        self.proj.block(0, self.dim, o, o + self.dims[a])
    }

    /// Position of `M(a)` inside the direct sum.
    pub fn offset(&self, a: usize) -> Option<usize> {
        (self.offsets[a] != usize::MAX).then_some(self.offsets[a])
    }
}

/// Colimit over the full subposet `d`: cokernel of
/// `x ↦ (M(a≤b)x at b) − (x at a)` summed over the covers of `d`.
pub fn colimit_over(m: &PersistenceModule, d: &ElemSet) -> Colimit {
    let f = m.field();
    let (off, total) = offsets(m, d);
    let rels = sub_relations(m, d);
    let mut cols = Vec::new();
    for (a, b, map) in &rels {
        let mut block = Matrix::zeros(f, total, m.dim(*a));
        block.set_block(off[*b], 0, map);
        block.set_block(off[*a], 0, &Matrix::identity(f, m.dim(*a)).neg());
        cols.push(block);
    }
    let boundary = Matrix::hstack(f, total, &cols);
    let (proj, section) = quotient(&boundary);
    Colimit {
        dim: proj.rows(),
        offsets: off,
        dims: m.dims().to_vec(),
        proj,
        section,
    }
}

pub fn colimit(m: &PersistenceModule) -> Colimit {
    colimit_over(m, &m.poset().full_set())
}

/// Limit of a diagram over a full subposet, as a subspace of
/// `⊕_{a ∈ D} M(a)`.
#[derive(Clone, Debug)]
pub struct Limit {
    pub dim: usize,
    offsets: Vec<usize>,
    dims: Vec<usize>,
    /// `Σ dim M(a) × dim`, columns spanning the compatible families.
    pub basis: Matrix,
}

impl Limit {
    /// Cone map `lim → M(a)`.
    pub fn cone(&self, a: usize) -> Matrix {
        let o = self.offsets[a];
        self.basis.block(o, o + self.dims[a], 0, self.dim)
    }

    pub fn offset(&self, a: usize) -> Option<usize> {
        (self.offsets[a] != usize::MAX).then_some(self.offsets[a])
    }
}

/// Limit over the full subposet `d`: families `(v_a)` with
/// `M(a≤b) v_a = v_b` on every cover of `d`.
pub fn limit_over(m: &PersistenceModule, d: &ElemSet) -> Limit {
    let f: Field = m.field();
    let (off, total) = offsets(m, d);
    let rels = sub_relations(m, d);
    let mut rows = Vec::new();
    for (a, b, map) in &rels {
        let mut block = Matrix::zeros(f, m.dim(*b), total);
        block.set_block(0, off[*a], map);
        block.set_block(0, off[*b], &Matrix::identity(f, m.dim(*b)).neg());
        rows.push(block);
    }
    let constraints = Matrix::vstack(f, total, &rows);
    let basis = constraints.nullspace_basis();
    Limit {
        dim: basis.cols(),
        offsets: off,
        dims: m.dims().to_vec(),
        basis,
    }
}

pub fn limit(m: &PersistenceModule) -> Limit {
    limit_over(m, &m.poset().full_set())
}
