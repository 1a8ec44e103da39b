//! Persistence modules over finite posets.
//!
//! The crate covers the combinatorics of finite posets (intervals, interior
//! systems, `A_n` segments), dense linear algebra over GF(p), persistence
//! modules with their restriction, induction, contraction and co-induction
//! functors, and the relative homological algebra of interval covers and
//! interval resolutions.
//!
//! ```
//! use posetlab::{families, intres};
//!
//! let star = families::star(4, true);
//! assert_eq!(intres::intresgldim(&star).unwrap().gldim, 2);
//! ```

pub mod bitset;
pub mod error;
pub mod families;
pub mod gen;
pub mod intres;
pub mod io;
pub mod linalg;
pub mod pmod;
pub mod poset;

pub use bitset::ElemSet;
pub use error::{Error, Result};
pub use linalg::{Field, Matrix};
pub use pmod::{ModuleMorphism, PersistenceModule};
pub use poset::{AnSegment, InteriorSystem, Interval, Poset};
