use super::{ModuleMorphism, PersistenceModule};
use crate::bitset::ElemSet;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::poset::Poset;

/// Basis of `Hom(M, N)`: the solution space of the naturality equations
/// on every cover. Unknowns are ordered element by element, each component
/// row-major, and the basis follows the free columns of the constraint RREF.
pub fn hom_basis(m: &PersistenceModule, n: &PersistenceModule) -> Result<Vec<ModuleMorphism>> {
    m.compatible(n)?;
    let sol = hom_solution_space(m, n);
    let p = m.poset();
    let f = m.field();
    Ok((0..sol.cols())
        .map(|c| {
            let mut off = 0;
            let comps = (0..p.n())
                .map(|a| {
                    let (r, k) = (n.dim(a), m.dim(a));
                    let comp = Matrix::from_fn(f, r, k, |i, j| sol.get(off + i * k + j, c) as i64);
                    off += r * k;
                    comp
                })
                .collect();
            ModuleMorphism::new_unchecked(m.clone(), n.clone(), comps)
        })
        .collect())
}

pub fn hom_dim(m: &PersistenceModule, n: &PersistenceModule) -> Result<usize> {
    m.compatible(n)?;
    Ok(hom_solution_space(m, n).cols())
}

fn hom_solution_space(m: &PersistenceModule, n: &PersistenceModule) -> Matrix {
    let p = m.poset();
    let f = m.field();
    let mut off = vec![0; p.n() + 1];
    for a in 0..p.n() {
        off[a + 1] = off[a] + n.dim(a) * m.dim(a);
    }
    let vars = off[p.n()];
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (e, &(a, b)) in p.covers().iter().enumerate() {
        let (me, ne) = (&m.maps()[e], &n.maps()[e]);
        let (ma, mb, na, nb) = (m.dim(a), m.dim(b), n.dim(a), n.dim(b));
        // (φ_b M_e − N_e φ_a)[i][j] = 0
        for i in 0..nb {
            for j in 0..ma {
                let mut row = vec![0u8; vars];
                for k in 0..mb {
                    let v = me.get(k, j);
                    if v != 0 {
                        let idx = off[b] + i * mb + k;
                        row[idx] = f.add(row[idx], v);
                    }
                }
                for k in 0..na {
                    let v = ne.get(i, k);
                    if v != 0 {
                        let idx = off[a] + k * ma + j;
                        row[idx] = f.sub(row[idx], v);
                    }
                }
                rows.push(row);
            }
        }
    }
    let flat: Vec<i64> = rows.iter().flatten().map(|&x| x as i64).collect();
    let cons = Matrix::from_fn(f, rows.len(), vars, |i, j| flat[i * vars + j]);
    cons.nullspace_basis()
}

/// Basis of `Hom(I_S, M)` as columns of vectors `(v_x)_{x ∈ S}` stacked in
/// ascending id order, with `v_x ∈ M(x)`.
///
/// A family defines a morphism iff `M(a⋖b) v_a = v_b` for covers inside `S`
/// and `M(a⋖b) v_a = 0` for covers leaving `S` upward.
pub fn hom_from_interval(m: &PersistenceModule, s: &ElemSet) -> Matrix {
    let p = m.poset();
    let f = m.field();
    let mut off = vec![usize::MAX; p.n()];
    let mut vars = 0;
    for x in s {
        off[x] = vars;
        vars += m.dim(x);
    }
    let mut blocks = Vec::new();
    for (e, &(a, b)) in p.covers().iter().enumerate() {
        if !s.contains(a) || m.dim(b) == 0 {
            continue;
        }
        let mut block = Matrix::zeros(f, m.dim(b), vars);
        block.set_block(0, off[a], &m.maps()[e]);
        if s.contains(b) {
            block.set_block(0, off[b], &Matrix::identity(f, m.dim(b)).neg());
        }
        blocks.push(block);
    }
    Matrix::vstack(f, vars, &blocks).nullspace_basis()
}

/// Turn a column of [`hom_from_interval`] into a morphism `I_S → M`.
pub fn interval_vector_to_morphism(m: &PersistenceModule, s: &ElemSet, v: &[u8]) -> ModuleMorphism {
    let p = m.poset();
    let f = m.field();
    let source = PersistenceModule::indicator(p.clone(), f, s).expect("interval");
    let mut off = 0;
    let comps = (0..p.n())
        .map(|x| {
            if s.contains(x) {
                let c = Matrix::column_vector(f, &v[off..off + m.dim(x)]);
                off += m.dim(x);
                c
            } else {
                Matrix::zeros(f, m.dim(x), 0)
            }
        })
        .collect();
    ModuleMorphism::new_unchecked(source, m.clone(), comps)
}

/// Basis of `Hom(I_S, I_T)` for intervals `S`, `T`: the components `C` of
/// `S ∩ T` with no cover from `S \ T` into `C` and no cover from `C` into
/// `T \ S`. Each basis morphism is the identity on `C` and zero elsewhere.
pub fn hom_interval_components(p: &Poset, s: &ElemSet, t: &ElemSet) -> Vec<ElemSet> {
    let both = s.intersection(t);
    if both.is_empty() {
        return Vec::new();
    }
    let s_only = s.difference(t);
    let t_only = t.difference(s);
    p.components(&both)
        .into_iter()
        .filter(|c| {
            c.iter().all(|x| {
                p.lower_covers(x).iter().all(|&y| !s_only.contains(y))
                    && p.upper_covers(x).iter().all(|&y| !t_only.contains(y))
            })
        })
        .collect()
}
