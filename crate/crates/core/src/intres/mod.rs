//! Interval covers, interval resolutions and interval resolution global
//! dimension, with closed-form and combinatorial oracles.

mod cover;
mod gldim;
mod irreducible;
mod koszul;
mod resolution;
mod sums;
mod verify;

pub use cover::{interval_cover, is_interval_approximation, verify_cover_minimal, IntervalCover};
pub use gldim::{
    gldim_via_contraction, intresgldim, intresgldim_over, is_minimal_m, tree_gldim, ContractionStep, GldimReport,
};
pub use irreducible::{gamma, irreducible_arrows, ArrowKind, IrreducibleArrow};
pub use koszul::{tree_koszul_resolution, KoszulComplex};
pub use resolution::{default_max_len, interval_resolution, intresdim, IntervalResolution};
pub use sums::{indicator_morphism, interval_sum, multiset};
pub use verify::{verify_ind_preserves_resolution, IndResolutionReport};

#[cfg(test)]
mod tests;
