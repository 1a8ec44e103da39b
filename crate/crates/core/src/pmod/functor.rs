//! Restriction, induction, contraction and co-induction along a full
//! subposet inclusion.

use super::limits::{colimit_over, limit_over};
use super::PersistenceModule;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poset::{InteriorSystem, Poset};
use std::sync::Arc;

fn restrict_to(m: &PersistenceModule, sub: Arc<Poset>, q_to_p: &[usize]) -> PersistenceModule {
    let dims = q_to_p.iter().map(|&a| m.dim(a)).collect();
    let maps = sub
        .covers()
        .iter()
        .map(|&(y, z)| m.path_map(q_to_p[y], q_to_p[z]).expect("induced order"))
        .collect();
    PersistenceModule::new_unchecked(sub, m.field(), dims, maps)
}

/// Restriction to the full subposet on `q`, a fresh poset with ids
/// renumbered ascending. Covers of the subposet need not be covers of the
/// ambient poset; their maps come from [`PersistenceModule::path_map`].
pub fn restrict(m: &PersistenceModule, q: &ElemSet) -> PersistenceModule {
    let (sub, q_to_p) = m.poset().induced(q);
    restrict_to(m, Arc::new(sub), &q_to_p)
}

fn check_ambient(sys: &InteriorSystem, m: &PersistenceModule) -> Result<()> {
    if Arc::ptr_eq(sys.ambient(), m.poset()) || sys.ambient().same_shape(m.poset()) {
        Ok(())
    } else {
        Err(Error::PosetMismatch)
    }
}

fn check_sub(sys: &InteriorSystem, n: &PersistenceModule) -> Result<()> {
    if Arc::ptr_eq(sys.sub_poset(), n.poset()) || sys.sub_poset().same_shape(n.poset()) {
        Ok(())
    } else {
        Err(Error::PosetMismatch)
    }
}

/// `Res_Q`: restriction to the subposet of an interior system.
pub fn res(sys: &InteriorSystem, m: &PersistenceModule) -> Result<PersistenceModule> {
    check_ambient(sys, m)?;
    let q_to_p: Vec<usize> = (0..sys.q_len()).map(|y| sys.q_to_p(y)).collect();
    Ok(restrict_to(m, sys.sub_poset().clone(), &q_to_p))
}

/// `Ind_Q`: pull a module over `Q` back along the floor.
pub fn induct(sys: &InteriorSystem, n: &PersistenceModule) -> Result<PersistenceModule> {
    check_sub(sys, n)?;
    let p = sys.ambient();
    let dims = (0..p.n()).map(|a| n.dim(sys.floor(a))).collect();
    let maps = p
        .covers()
        .iter()
        .map(|&(a, b)| n.path_map(sys.floor(a), sys.floor(b)).expect("floor is monotone"))
        .collect();
    Ok(PersistenceModule::new_unchecked(p.clone(), n.field(), dims, maps))
}

/// `Cont_Q` for aligned systems: evaluate at the fiber maxima `ν(y)`.
pub fn contract(sys: &InteriorSystem, m: &PersistenceModule) -> Result<PersistenceModule> {
    check_ambient(sys, m)?;
    if !sys.is_aligned() {
        return Err(Error::NotAligned);
    }
    let q = sys.sub_poset();
    let nu: Vec<usize> = (0..sys.q_len()).map(|y| sys.nu(y)).collect::<Result<_>>()?;
    let dims = nu.iter().map(|&a| m.dim(a)).collect();
    let maps = q
        .covers()
        .iter()
        .map(|&(y, z)| m.path_map(nu[y], nu[z]).expect("nu is monotone on aligned systems"))
        .collect();
    Ok(PersistenceModule::new_unchecked(q.clone(), m.field(), dims, maps))
}

/// `Cont_Q` for any interior system: `(Cont M)(x) = colim M|⌈x^↓⌉`, with
/// maps induced by the inclusions `⌈y^↓⌉ ⊆ ⌈x^↓⌉`.
pub fn contract_general(sys: &InteriorSystem, m: &PersistenceModule) -> Result<PersistenceModule> {
    check_ambient(sys, m)?;
    let q = sys.sub_poset();
    let f = m.field();
    let colims: Vec<_> = (0..sys.q_len())
        .map(|y| (sys.down_fiber(y), colimit_over(m, &sys.down_fiber(y))))
        .collect();
    let dims = colims.iter().map(|(_, c)| c.dim).collect();
    let maps = q
        .covers()
        .iter()
        .map(|&(y, z)| {
            let (dy, cy) = &colims[y];
            let (_, cz) = &colims[z];
            // Embed ⊕_{a∈D_y} M(a) into ⊕_{a∈D_z} M(a) blockwise.
            let mut embed = Matrix::zeros(f, cz.proj.cols(), cy.proj.cols());
            for a in dy {
                let (oy, oz) = (cy.offset(a).unwrap(), cz.offset(a).unwrap());
                embed.set_block(oz, oy, &Matrix::identity(f, m.dim(a)));
            }
            cz.proj.mul(&embed).mul(&cy.section)
        })
        .collect();
    Ok(PersistenceModule::new_unchecked(q.clone(), f, dims, maps))
}

/// `Coind_Q`: `(Coind N)(a) = lim N|_{Q ∩ a^↑}`, with maps given by
/// forgetting coordinates of compatible families.
pub fn coinduct(sys: &InteriorSystem, n: &PersistenceModule) -> Result<PersistenceModule> {
    check_sub(sys, n)?;
    let p = sys.ambient();
    let q = sys.sub_poset();
    let f = n.field();
    let ups: Vec<ElemSet> = (0..p.n())
        .map(|a| ElemSet::from_ids(q.n(), (0..q.n()).filter(|&y| p.leq(a, sys.q_to_p(y)))))
        .collect();
    let lims: Vec<_> = ups.iter().map(|u| limit_over(n, u)).collect();
    let dims = lims.iter().map(|l| l.dim).collect();
    let maps = p
        .covers()
        .iter()
        .map(|&(a, b)| {
            let (la, lb) = (&lims[a], &lims[b]);
            let mut forget = Matrix::zeros(f, lb.basis.rows(), la.basis.rows());
            for y in &ups[b] {
                let (oa, ob) = (la.offset(y).unwrap(), lb.offset(y).unwrap());
                forget.set_block(ob, oa, &Matrix::identity(f, n.dim(y)));
            }
            lb.basis
                .solve(&forget.mul(&la.basis))
                .expect("restricted families stay compatible")
        })
        .collect();
    Ok(PersistenceModule::new_unchecked(p.clone(), f, dims, maps))
}

/// Whether every `M(floor(a) ≤ a)` is invertible, i.e. `M ≅ Ind Cont M`.
pub fn in_essential_image(sys: &InteriorSystem, m: &PersistenceModule) -> Result<bool> {
    check_ambient(sys, m)?;
    let p = sys.ambient();
    for a in 0..p.n() {
        let fl = sys.q_to_p(sys.floor(a));
        if !m.path_map(fl, a)?.is_invertible() {
            return Ok(false);
        }
    }
    Ok(true)
}
