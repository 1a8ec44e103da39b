use super::resolution::{default_max_len, interval_resolution};
use super::sums::multiset;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::pmod::{induct, PersistenceModule};
use crate::poset::InteriorSystem;

/// Comparison of `Ind_Q` applied termwise to a resolution of `M` with a
/// resolution of `Ind_Q M` computed from scratch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndResolutionReport {
    pub dim_over_q: usize,
    pub dim_over_p: usize,
    /// Terms of the transported resolution, as ambient interval multisets.
    pub transported: Vec<Vec<(ElemSet, usize)>>,
    /// Terms of the directly computed resolution.
    pub direct: Vec<Vec<(ElemSet, usize)>>,
}

impl IndResolutionReport {
    pub fn termwise_isomorphic(&self) -> bool {
        self.transported == self.direct
    }

    pub fn holds(&self) -> bool {
        self.termwise_isomorphic() && self.dim_over_p == self.dim_over_q
    }
}

/// Terms are direct sums of interval modules, so termwise isomorphism is
/// equality of interval multisets; `Ind I_S = I_{⌈S⌉}`.
pub fn verify_ind_preserves_resolution(sys: &InteriorSystem, m: &PersistenceModule) -> Result<IndResolutionReport> {
    if !sys.is_aligned() {
        return Err(Error::NotAligned);
    }
    let over_q = interval_resolution(m, default_max_len(m))?;
    let ind = induct(sys, m)?;
    let over_p = interval_resolution(&ind, default_max_len(&ind))?;
    let transported = over_q
        .covers
        .iter()
        .map(|c| {
            let sets: Vec<ElemSet> = c.summands.iter().map(|s| sys.ceil_preimage(s)).collect();
            multiset(&sets)
        })
        .collect();
    let direct = over_p.covers.iter().map(|c| multiset(&c.summands)).collect();
    Ok(IndResolutionReport {
        dim_over_q: over_q.dim(),
        dim_over_p: over_p.dim(),
        transported,
        direct,
    })
}
