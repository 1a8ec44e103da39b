//! Machine-readable results.

use crate::intres::GldimReport;
use crate::poset::Poset;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalDim {
    #[serde(rename = "S")]
    pub s: Vec<String>,
    pub intresdim: usize,
}

/// Global dimension result.
///
/// `timings_ms` is only filled on request, so that the default output is
/// byte-for-byte reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GldimJson {
    pub schema_version: u32,
    pub poset: String,
    pub gldim: usize,
    pub witness_interval: Vec<String>,
    pub per_interval: Vec<IntervalDim>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl GldimJson {
    pub fn new(p: &Poset, r: &GldimReport) -> Self {
        GldimJson {
            schema_version: SCHEMA_VERSION,
            poset: p.name().to_string(),
            gldim: r.gldim,
            witness_interval: p.set_labels(r.witness.members()),
            per_interval: r
                .per_interval
                .iter()
                .map(|(s, d)| IntervalDim {
                    s: p.set_labels(s.members()),
                    intresdim: *d,
                })
                .collect(),
            timings_ms: None,
        }
    }
}
