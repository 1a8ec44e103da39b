use super::cover::{interval_cover, IntervalCover};
use crate::error::{Error, Result};
use crate::pmod::PersistenceModule;
use crate::poset::Interval;

/// `0 → V_d → … → V_1 → V_0 → M → 0` with each `V_i → ker` a minimal
/// interval cover.
#[derive(Clone, Debug)]
pub struct IntervalResolution {
    pub covers: Vec<IntervalCover>,
}

impl IntervalResolution {
    /// Largest `i` with `V_i ≠ 0`; the zero module has dimension 0.
    pub fn dim(&self) -> usize {
        self.covers.len().saturating_sub(1)
    }

    /// Multiplicities of each term.
    pub fn terms(&self) -> Vec<Vec<(Interval, usize)>> {
        self.covers.iter().map(|c| c.multiplicities.clone()).collect()
    }
}

/// Default guard on resolution length: total dimension plus two.
pub fn default_max_len(m: &PersistenceModule) -> usize {
    m.total_dim() + 2
}

/// Iterate minimal covers of successive kernels until the kernel vanishes.
pub fn interval_resolution(m: &PersistenceModule, max_len: usize) -> Result<IntervalResolution> {
    let mut covers = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        if covers.len() >= max_len {
            return Err(Error::MaxLenExceeded(max_len));
        }
        let c = interval_cover(&cur)?;
        cur = c.kernel.clone();
        covers.push(c);
    }
    Ok(IntervalResolution { covers })
}

pub fn intresdim(m: &PersistenceModule) -> Result<usize> {
    Ok(interval_resolution(m, default_max_len(m))?.dim())
}
