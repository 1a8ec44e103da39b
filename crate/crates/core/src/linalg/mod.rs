//! Exact dense linear algebra over GF(p).

mod field;
mod matrix;
mod reduce;

pub use field::Field;
pub use matrix::Matrix;
pub use reduce::RowBasis;
