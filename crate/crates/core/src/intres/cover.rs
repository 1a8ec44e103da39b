use super::sums::{interval_sum, positions};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowBasis};
use crate::pmod::{hom_from_interval, hom_interval_components, ModuleMorphism, PersistenceModule};
use crate::poset::Interval;

/// A minimal interval cover `⊕ I_S^{m_S} → M` and its kernel.
#[derive(Clone, Debug)]
pub struct IntervalCover {
    /// Non-zero multiplicities in canonical interval order.
    pub multiplicities: Vec<(Interval, usize)>,
    /// The summands of `cover`, one entry per copy, in the same order.
    pub summands: Vec<ElemSet>,
    pub cover: PersistenceModule,
    pub cover_map: ModuleMorphism,
    pub kernel: PersistenceModule,
    pub kernel_incl: ModuleMorphism,
}

impl IntervalCover {
    pub fn total_multiplicity(&self) -> usize {
        self.multiplicities.iter().map(|(_, m)| m).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }
}

/// `Hom(I_S, M)` for every interval `S` meeting the support, as columns of
/// vectors over `S` (see [`hom_from_interval`]).
pub(crate) struct HomTable {
    pub intervals: Vec<Interval>,
    pub homs: Vec<Matrix>,
}

impl HomTable {
    pub fn new(m: &PersistenceModule) -> HomTable {
        let supp = m.support();
        let intervals: Vec<Interval> = m
            .poset()
            .enumerate_intervals()
            .into_iter()
            .filter(|s| s.members().intersects(&supp))
            .collect();
        let homs = intervals.iter().map(|s| hom_from_interval(m, s.members())).collect();
        HomTable { intervals, homs }
    }

    /// Radical part of `Hom(I_S, M)`: composites `I_S → I_T → M` with
    /// `T ≠ S`, as a row space over the coordinates of `S`.
    pub fn radical(&self, m: &PersistenceModule, idx: usize) -> RowBasis {
        let p = m.poset();
        let s = self.intervals[idx].members();
        let coords = coordinates(m, s);
        let len = s.iter().map(|x| m.dim(x)).sum();
        let mut rad = RowBasis::new(m.field(), len);
        for (j, t) in self.intervals.iter().enumerate() {
            if j == idx || self.homs[j].cols() == 0 {
                continue;
            }
            let t = t.members();
            let comps = hom_interval_components(p, s, t);
            if comps.is_empty() {
                continue;
            }
            let tcoords = coordinates(m, t);
            for c in comps {
                for col in 0..self.homs[j].cols() {
                    let mut v = vec![0u8; len];
                    for x in &c {
                        for k in 0..m.dim(x) {
                            v[coords[x] + k] = self.homs[j].get(tcoords[x] + k, col);
                        }
                    }
                    rad.insert(&v);
                }
            }
        }
        rad
    }
}

/// Offset of each member's block in the stacked vector over `s`.
pub(crate) fn coordinates(m: &PersistenceModule, s: &ElemSet) -> Vec<usize> {
    let mut off = vec![usize::MAX; m.poset().n()];
    let mut k = 0;
    for x in s {
        off[x] = k;
        k += m.dim(x);
    }
    off
}

/// Minimal interval cover of `m` via the radical quotient.
///
/// `m_S = dim Hom(I_S, M) − dim rad(I_S, M)`, where the radical is spanned
/// by composites through intervals `T ≠ S`. One-step composites suffice: a
/// radical map into a sum of intervals splits into components, each a map
/// between distinct intervals, and `End(I_S) = k`. Coset representatives
/// are the basis vectors of `Hom(I_S, M)` that stay independent after the
/// radical, in basis order.
pub fn interval_cover(m: &PersistenceModule) -> Result<IntervalCover> {
    m.check_commutativity()?;
    let p = m.poset();
    let f = m.field();
    let table = HomTable::new(m);
    let mut multiplicities = Vec::new();
    let mut summands: Vec<ElemSet> = Vec::new();
    let mut reps: Vec<(ElemSet, Vec<u8>)> = Vec::new();
    for (idx, s) in table.intervals.iter().enumerate() {
        let h = &table.homs[idx];
        if h.cols() == 0 {
            continue;
        }
        let mut basis = table.radical(m, idx);
        let mut count = 0;
        for c in 0..h.cols() {
            let v = h.column_entries(c);
            if basis.insert(&v) {
                reps.push((s.members().clone(), v));
                summands.push(s.members().clone());
                count += 1;
            }
        }
        if count > 0 {
            multiplicities.push((s.clone(), count));
        }
    }
    let cover = interval_sum(p, f, &summands)?;
    let comps: Vec<Matrix> = (0..p.n())
        .map(|x| {
            let pos = positions(&summands, x);
            let mut mat = Matrix::zeros(f, m.dim(x), cover.dim(x));
            for ((s, v), col) in reps.iter().zip(&pos) {
                if let Some(c) = col {
                    let off = coordinates(m, s)[x];
                    for r in 0..m.dim(x) {
                        mat.set(r, *c, v[off + r]);
                    }
                }
            }
            mat
        })
        .collect();
    let cover_map = ModuleMorphism::new(cover.clone(), m.clone(), comps)?;
    if !cover_map.is_surjective() {
        return Err(Error::Internal("interval cover map is not surjective".into()));
    }
    let (kernel, kernel_incl) = cover_map.kernel();
    Ok(IntervalCover {
        multiplicities,
        summands,
        cover,
        cover_map,
        kernel,
        kernel_incl,
    })
}

/// Whether `φ: V → M` is an interval approximation: every `I_T → M`
/// factors through `φ`.
pub fn is_interval_approximation(phi: &ModuleMorphism) -> bool {
    let v = phi.source();
    let m = phi.target();
    m.poset().enumerate_intervals().iter().all(|t| {
        let hm = hom_from_interval(m, t.members());
        if hm.cols() == 0 {
            return true;
        }
        let hv = hom_from_interval(v, t.members());
        let pushed = push_forward(phi, t.members(), &hv);
        pushed.rank() == hm.cols()
    })
}

/// Apply `φ` to each column of a stacked Hom vector over `s`.
fn push_forward(phi: &ModuleMorphism, s: &ElemSet, hv: &Matrix) -> Matrix {
    let v = phi.source();
    let m = phi.target();
    let f = m.field();
    let vc = coordinates(v, s);
    let mc = coordinates(m, s);
    let len: usize = s.iter().map(|x| m.dim(x)).sum();
    let mut out = Matrix::zeros(f, len, hv.cols());
    for x in s {
        let block = hv.block(vc[x], vc[x] + v.dim(x), 0, hv.cols());
        let img = phi.comp(x).mul(&block);
        out.set_block(mc[x], 0, &img);
    }
    out
}

/// Re-derive minimality of a computed cover: for each `S`, the images of
/// the summand inclusions `I_S → V → M` are independent modulo the radical
/// and together with it span `Hom(I_S, M)`.
pub fn verify_cover_minimal(cover: &IntervalCover, m: &PersistenceModule) -> bool {
    let table = HomTable::new(m);
    for (idx, s) in table.intervals.iter().enumerate() {
        let rad = table.radical(m, idx);
        let mut full = rad.clone();
        for c in 0..table.homs[idx].cols() {
            full.insert(&table.homs[idx].column_entries(c));
        }
        let mut top = rad;
        let copies = cover.summands.iter().filter(|t| *t == s.members()).count();
        for k in 0..copies {
            if !top.insert(&inclusion_image(cover, s.members(), k)) {
                return false;
            }
        }
        if top.dim() != full.dim() {
            return false;
        }
    }
    true
}

/// Image in `M` of the `k`-th copy of `I_S` inside the cover.
fn inclusion_image(cover: &IntervalCover, s: &ElemSet, k: usize) -> Vec<u8> {
    let m = cover.cover_map.target();
    let coords = coordinates(m, s);
    let len: usize = s.iter().map(|x| m.dim(x)).sum();
    let mut v = vec![0u8; len];
    let idx = cover
        .summands
        .iter()
        .enumerate()
        .filter(|(_, t)| *t == s)
        .nth(k)
        .map(|(i, _)| i)
        .expect("copy exists");
    for x in s {
        let col = positions(&cover.summands, x)[idx].expect("x lies in S");
        for r in 0..m.dim(x) {
            v[coords[x] + r] = cover.cover_map.comp(x).get(r, col);
        }
    }
    v
}
