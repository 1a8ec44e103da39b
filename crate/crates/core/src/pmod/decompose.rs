//! Splitting off interval summands and testing isomorphism.

use super::hom::{hom_basis, hom_dim, hom_from_interval, interval_vector_to_morphism};
use super::{ModuleMorphism, PersistenceModule};
use crate::error::{Error, Result};
use crate::poset::Interval;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Interval summands with multiplicities, plus what is left over.
#[derive(Clone, Debug)]
pub struct SummandList {
    /// In canonical interval order.
    pub summands: Vec<(Interval, usize)>,
    /// A complement of the interval summands; it has no interval summand.
    pub residual: PersistenceModule,
}

impl SummandList {
    pub fn is_interval_decomposable(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn multiplicity(&self, s: &Interval) -> usize {
        self.summands.iter().find(|(t, _)| t == s).map_or(0, |(_, m)| *m)
    }
}

/// Greedily split off interval summands in canonical interval order.
///
/// For each interval `S`, look for `f: I_S → M` and `g: M → I_S` with
/// `g ∘ f ≠ 0`. Since `End(I_S) = k`, rescaling gives `g ∘ f = 1`, so
/// `M ≅ I_S ⊕ ker g`; continue with `ker g`.
pub fn split_interval_summands(m: &PersistenceModule) -> Result<SummandList> {
    m.check_commutativity()?;
    let p = m.poset().clone();
    let mut cur = m.clone();
    let mut summands = Vec::new();
    for s in p.enumerate_intervals() {
        if cur.is_zero() {
            break;
        }
        let mut count = 0;
        loop {
            if s.members().iter().any(|x| cur.dim(x) == 0) {
                break;
            }
            let Some(g) = split_once(&cur, &s)? else {
                break;
            };
            cur = g.kernel().0;
            count += 1;
        }
        if count > 0 {
            summands.push((s, count));
        }
    }
    Ok(SummandList {
        summands,
        residual: cur,
    })
}

/// A retraction `g: M → I_S` admitting a section, if one exists.
fn split_once(m: &PersistenceModule, s: &Interval) -> Result<Option<ModuleMorphism>> {
    let p = m.poset();
    let fld = m.field();
    let is = PersistenceModule::indicator(p.clone(), fld, s.members())?;
    let hs = hom_from_interval(m, s.members());
    if hs.cols() == 0 {
        return Ok(None);
    }
    let gs = hom_basis(m, &is)?;
    let x0 = s.members().first().unwrap();
    for c in 0..hs.cols() {
        let v = hs.column_entries(c);
        let fm = interval_vector_to_morphism(m, s.members(), &v);
        for g in &gs {
            let scalar = g.comp(x0).mul(fm.comp(x0)).get(0, 0);
            if scalar != 0 {
                return Ok(Some(g.scale(fld.inv(scalar))));
            }
        }
    }
    Ok(None)
}

pub fn is_interval_decomposable(m: &PersistenceModule) -> Result<bool> {
    Ok(split_interval_summands(m)?.is_interval_decomposable())
}

/// Exact isomorphism test.
///
/// Pointwise dimensions and Hom dimensions are compared first; then
/// interval summands are split off both sides and compared as multisets;
/// finally a pointwise invertible morphism between the residuals is
/// searched for (exhaustively when the Hom space has at most 2^14
/// elements).
pub fn is_isomorphic(m: &PersistenceModule, n: &PersistenceModule) -> Result<bool> {
    m.compatible(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m == n {
        return Ok(true);
    }
    let end_m = hom_dim(m, m)?;
    if hom_dim(m, n)? != end_m || hom_dim(n, m)? != end_m || hom_dim(n, n)? != end_m {
        return Ok(false);
    }
    let sm = split_interval_summands(m)?;
    let sn = split_interval_summands(n)?;
    if sm.summands != sn.summands {
        return Ok(false);
    }
    find_isomorphism(&sm.residual, &sn.residual).map(|o| o.is_some())
}

/// A pointwise invertible morphism `M → N`, if one exists.
pub fn find_isomorphism(m: &PersistenceModule, n: &PersistenceModule) -> Result<Option<ModuleMorphism>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModuleMorphism::zero(m.clone(), n.clone())));
    }
    let basis = hom_basis(m, n)?;
    let k = basis.len();
    let p = m.field().p() as u64;
    let combine = |coeffs: &[u8]| {
        let mut acc = ModuleMorphism::zero(m.clone(), n.clone());
        for (c, b) in coeffs.iter().zip(&basis) {
            if *c != 0 {
                acc = acc.add(&b.scale(*c)).expect("same ends");
            }
        }
        acc
    };
    if let Some(total) = p.checked_pow(k as u32).filter(|&t| t <= 1 << 14) {
        for code in 1..total {
            let mut c = code;
            let coeffs: Vec<u8> = (0..k)
                .map(|_| {
                    let d = (c % p) as u8;
                    c /= p;
                    d
                })
                .collect();
            let f = combine(&coeffs);
            if f.is_isomorphism() {
                return Ok(Some(f));
            }
        }
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..512 {
        let coeffs: Vec<u8> = (0..k).map(|_| rng.gen_range(0..p) as u8).collect();
        let f = combine(&coeffs);
        if f.is_isomorphism() {
            return Ok(Some(f));
        }
    }
    Err(Error::Internal(format!(
        "isomorphism search over a {k}-dimensional Hom space was inconclusive"
    )))
}

/// Pointwise identity check used by callers that know both modules share a
/// basis.
pub fn same_data(m: &PersistenceModule, n: &PersistenceModule) -> bool {
    m.dims() == n.dims() && m.maps() == n.maps()
}
