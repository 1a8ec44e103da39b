//! Row reduction: a bit-packed GF(2) path and a byte path for odd p.

use super::field::Field;
use super::matrix::Matrix;

pub(crate) fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    if m.field().is_gf2() {
        rref_gf2(m)
    } else {
        rref_bytes(m)
    }
}

pub(crate) fn rref_bytes(m: &Matrix) -> (Matrix, Vec<usize>) {
    let f = m.field();
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(sel) = (r..rows).find(|&i| a.get(i, c) != 0) else {
            continue;
        };
        if sel != r {
            for j in 0..cols {
                let t = a.get(sel, j);
                a.set(sel, j, a.get(r, j));
                a.set(r, j, t);
            }
        }
        let inv = f.inv(a.get(r, c));
        for x in a.row_mut(r).iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = a.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c);
            if factor != 0 {
                for (x, &y) in a.row_mut(i).iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

fn rref_gf2(m: &Matrix) -> (Matrix, Vec<usize>) {
    let (rows, cols) = m.shape();
    let w = cols.div_ceil(64).max(1);
    let mut bits = vec![0u64; rows * w];
    for i in 0..rows {
        for (j, &x) in m.row(i).iter().enumerate() {
            if x == 1 {
                bits[i * w + j / 64] |= 1 << (j % 64);
            }
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let (cw, cb) = (c / 64, 1u64 << (c % 64));
        let Some(sel) = (r..rows).find(|&i| bits[i * w + cw] & cb != 0) else {
            continue;
        };
        if sel != r {
            for k in 0..w {
                bits.swap(sel * w + k, r * w + k);
            }
        }
        for i in 0..rows {
            if i != r && bits[i * w + cw] & cb != 0 {
                // Only words from the pivot column onward can be nonzero in the pivot row.
                for k in cw..w {
                    let v = bits[r * w + k];
                    bits[i * w + k] ^= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut data = vec![0u8; rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            data[i * cols + j] = (bits[i * w + j / 64] >> (j % 64) & 1) as u8;
        }
    }
    (Matrix::from_raw(Field::GF2, rows, cols, data), pivots)
}

/// An incrementally built row space kept in echelon form.
///
/// Used for rank-of-a-union questions and for choosing coset
/// representatives deterministically.
#[derive(Clone, Debug)]
pub struct RowBasis {
    field: Field,
    len: usize,
    rows: Vec<(usize, Vec<u8>)>,
}

impl RowBasis {
    pub fn new(field: Field, len: usize) -> Self {
        RowBasis {
            field,
            len,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; the result is zero iff `v` lies in
    /// the span.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let f = self.field;
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Add `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let f = self.field;
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(r[p]);
        r.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for (_, row) in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&r) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.rows.push((p, r));
        true
    }
}
