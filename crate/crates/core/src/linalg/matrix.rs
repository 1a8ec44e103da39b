use super::field::Field;
use super::reduce;
use crate::error::{Error, Result};
use std::fmt;

/// Dense matrix over GF(p), row-major, entries in `0..p`.
///
/// Zero-row and zero-column matrices are valid and stand for maps to or from
/// the zero space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from integer rows, reducing each entry mod p.
    ///
    /// # Panics
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(field: Field, cols: usize, rows: &[R]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged row {i}");
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = field.reduce(x);
            }
        }
        m
    }

    pub(crate) fn from_raw(field: Field, rows: usize, cols: usize, data: Vec<u8>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < field.p()));
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = field.reduce(f(i, j));
            }
        }
        m
    }

    /// A single column vector.
    pub fn column_vector(field: Field, entries: &[u8]) -> Self {
        Self::from_raw(
            field,
            entries.len(),
            1,
            entries.iter().map(|&x| x % field.p()).collect(),
        )
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [u8] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Matrix {
        self.select_cols(&[j])
    }

    pub fn column_entries(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// Matrix product; shapes must agree.
    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field.p(), rhs.field.p()));
        }
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, rhs.cols);
        if f.is_gf2() {
            for i in 0..self.rows {
                for k in 0..self.cols {
                    if self.data[i * self.cols + k] == 1 {
                        let src = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                        let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                        for (d, &s) in dst.iter_mut().zip(src) {
                            *d ^= s;
                        }
                    }
                }
            }
        } else {
            let p = f.p() as u32;
            let mut acc = vec![0u32; rhs.cols];
            for i in 0..self.rows {
                acc.iter_mut().for_each(|a| *a = 0);
                for k in 0..self.cols {
                    let a = self.data[i * self.cols + k] as u32;
                    if a != 0 {
                        for (j, x) in acc.iter_mut().enumerate() {
                            *x = (*x + a * rhs.data[k * rhs.cols + j] as u32) % p;
                        }
                    }
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] = acc[j] as u8;
                }
            }
        }
        Ok(out)
    }

    /// Matrix product.
    ///
    /// # Panics
    ///
    /// Panics on shape or field mismatch; use [`Matrix::checked_mul`] for
    /// untrusted shapes.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn zip(&self, rhs: &Matrix, f: impl Fn(u8, u8) -> u8) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        let f = self.field;
        self.zip(rhs, |a, b| f.add(a, b))
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        let f = self.field;
        self.zip(rhs, |a, b| f.sub(a, b))
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field;
        let mut m = self.clone();
        m.data.iter_mut().for_each(|x| *x = f.neg(*x));
        m
    }

    pub fn scale(&self, c: u8) -> Matrix {
        let f = self.field;
        let mut m = self.clone();
        m.data.iter_mut().for_each(|x| *x = f.mul(*x, c));
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Self::zeros(self.field, idx.len(), self.cols);
        for (r, &i) in idx.iter().enumerate() {
            m.row_mut(r).copy_from_slice(self.row(i));
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Self::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (c, &j) in idx.iter().enumerate() {
                m.data[i * idx.len() + c] = self.get(i, j);
            }
        }
        m
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut m = Self::zeros(self.field, r1 - r0, c1 - c0);
        for i in r0..r1 {
            m.row_mut(i - r0).copy_from_slice(&self.row(i)[c0..c1]);
        }
        m
    }

    /// Overwrite the block whose top-left corner is `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            let cols = self.cols;
            self.data[(r0 + i) * cols + c0..(r0 + i) * cols + c0 + b.cols].copy_from_slice(b.row(i));
        }
    }

    /// Side-by-side concatenation; every part must have `rows` rows.
    pub fn hstack(field: Field, rows: usize, parts: &[Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut c = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            out.set_block(0, c, m);
            c += m.cols;
        }
        out
    }

    /// Vertical concatenation; every part must have `cols` columns.
    pub fn vstack(field: Field, cols: usize, parts: &[Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&m.data);
        }
        Self::from_raw(field, rows, cols, data)
    }

    pub fn block_diag(field: Field, parts: &[Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for m in parts {
            out.set_block(r, c, m);
            r += m.rows;
            c += m.cols;
        }
        out
    }

    /// Reduced row echelon form and pivot columns, pivoting on the first
    /// nonzero entry scanning columns left to right.
    pub fn row_reduce(&self) -> (Matrix, Vec<usize>) {
        reduce::rref(self)
    }

    pub fn rank(&self) -> usize {
        reduce::rref(self).1.len()
    }

    /// Columns spanning the kernel, one per free column of the RREF in
    /// ascending order.
    pub fn nullspace_basis(&self) -> Matrix {
        let (r, pivots) = self.row_reduce();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut k = Self::zeros(f, self.cols, free.len());
        for (c, &j) in free.iter().enumerate() {
            k.set(j, c, 1);
            for (i, &p) in pivots.iter().enumerate() {
                k.set(p, c, f.neg(r.get(i, j)));
            }
        }
        k
    }

    /// Columns spanning the column space: the nonzero rows of the RREF of the
    /// transpose.
    pub fn image_basis(&self) -> Matrix {
        let (r, pivots) = self.transpose().row_reduce();
        r.block(0, pivots.len(), 0, r.cols).transpose()
    }

    /// Some `X` with `self * X = b`, free variables set to zero.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let aug = Self::hstack(self.field, self.rows, &[self.clone(), b.clone()]);
        let (r, pivots) = aug.row_reduce();
        let mut x = Self::zeros(self.field, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if p >= self.cols {
                return None;
            }
            for j in 0..b.cols {
                x.set(p, j, r.get(i, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Self::identity(self.field, self.rows))?;
        (self.mul(&x) == Self::identity(self.field, self.rows)).then_some(x)
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x{} {:?}: {}]", self.rows, self.cols, self.field, self)
    }
}

/// Writes the matrix literal syntax `1 0; 1 1`.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}
