use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// Parse `1 0; 1 1` into a matrix, reducing entries mod p.
///
/// An empty literal is the `0×0` matrix. Errors are reported on `line`.
pub fn parse_matrix(s: &str, field: Field, line: usize) -> Result<Matrix> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Matrix::zeros(field, 0, 0));
    }
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (r, chunk) in s.split(';').enumerate() {
        let row = chunk
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::parse(line, format!("bad matrix entry `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.is_empty() {
            return Err(Error::parse(line, format!("empty row {} in matrix literal", r + 1)));
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::parse(line, "ragged matrix literal"));
            }
        }
        rows.push(row);
    }
    let cols = rows[0].len();
    Ok(Matrix::from_rows(field, cols, &rows))
}
