use super::content_lines;
use super::matrix_lit::parse_matrix;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::pmod::PersistenceModule;
use crate::poset::Poset;
use std::fmt::Write;
use std::sync::Arc;

/// The `field` and `over` lines of a module file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmodHeader {
    pub field: Field,
    pub over: String,
}

/// Read only the header, to find out which poset a module lives over.
pub fn parse_pmod_header(text: &str) -> Result<PmodHeader> {
    let mut lines = content_lines(text);
    let (l1, first) = lines.next().ok_or_else(|| Error::parse(1, "empty module file"))?;
    let field = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["field", p] => {
            let p: u32 = p.parse().map_err(|_| Error::parse(l1, format!("bad field `{p}`")))?;
            Field::new(p).map_err(|e| Error::parse(l1, e.to_string()))?
        }
        _ => return Err(Error::parse(l1, "expected `field <p>`")),
    };
    let (l2, second) = lines
        .next()
        .ok_or_else(|| Error::parse(l1 + 1, "expected `over <poset>`"))?;
    let over = match second.split_whitespace().collect::<Vec<_>>()[..] {
        ["over", name] => name.to_string(),
        _ => return Err(Error::parse(l2, "expected `over <poset>`")),
    };
    Ok(PmodHeader { field, over })
}

/// Parse a module file over `poset`:
///
/// ```text
/// field 2
/// over square
/// dim a 1
/// dim b 1
/// map a b : 1
/// ```
///
/// Omitted dimensions are 0 and omitted maps are zero. The `over` name
/// must match the poset.
pub fn parse_pmod(text: &str, poset: Arc<Poset>) -> Result<PersistenceModule> {
    let header = parse_pmod_header(text)?;
    let field = header.field;
    let mut lines = content_lines(text).skip(2);
    if header.over != poset.name() {
        let ln = content_lines(text).nth(1).map_or(2, |(l, _)| l);
        return Err(Error::parse(
            ln,
            format!("module is over `{}`, poset is `{}`", header.over, poset.name()),
        ));
    }
    let look = |ln: usize, x: &str| {
        poset
            .id(x)
            .ok_or_else(|| Error::parse(ln, format!("unknown element `{x}`")))
    };
    let mut dims = vec![0usize; poset.n()];
    let mut dim_set = vec![false; poset.n()];
    let mut map_lines: Vec<(usize, usize, usize, &str)> = Vec::new();
    for (ln, line) in lines.by_ref() {
        if let Some(rest) = line.strip_prefix("map ") {
            let (ends, lit) = rest
                .split_once(':')
                .ok_or_else(|| Error::parse(ln, "expected `map <a> <b> : <matrix>`"))?;
            let ends: Vec<&str> = ends.split_whitespace().collect();
            if ends.len() != 2 {
                return Err(Error::parse(ln, "expected `map <a> <b> : <matrix>`"));
            }
            let (a, b) = (look(ln, ends[0])?, look(ln, ends[1])?);
            if !poset.is_cover(a, b) {
                return Err(Error::parse(ln, format!("`{} {}` is not a cover", ends[0], ends[1])));
            }
            map_lines.push((ln, a, b, lit));
        } else {
            match line.split_whitespace().collect::<Vec<_>>()[..] {
                ["dim", x, d] => {
                    let a = look(ln, x)?;
                    if dim_set[a] {
                        return Err(Error::parse(ln, format!("dimension of `{x}` given twice")));
                    }
                    dims[a] = d
                        .parse()
                        .map_err(|_| Error::parse(ln, format!("bad dimension `{d}`")))?;
                    dim_set[a] = true;
                }
                _ => return Err(Error::parse(ln, "expected `dim <el> <n>` or `map <a> <b> : <matrix>`")),
            }
        }
    }
    let mut maps: Vec<Option<Matrix>> = vec![None; poset.covers().len()];
    for (ln, a, b, lit) in map_lines {
        let m = parse_matrix(lit, field, ln)?;
        let want = (dims[b], dims[a]);
        let m = if m.shape() == (0, 0) && want.0 * want.1 == 0 {
            Matrix::zeros(field, want.0, want.1)
        } else if m.shape() != want {
            return Err(Error::parse(
                ln,
                format!(
                    "map has shape {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                ),
            ));
        } else {
            m
        };
        let idx = poset.cover_index(a, b).unwrap();
        if maps[idx].is_some() {
            return Err(Error::parse(ln, "map given twice"));
        }
        maps[idx] = Some(m);
    }
    let maps = poset
        .covers()
        .iter()
        .zip(maps)
        .map(|(&(a, b), m)| m.unwrap_or_else(|| Matrix::zeros(field, dims[b], dims[a])))
        .collect();
    PersistenceModule::new(poset, field, dims, maps)
}

/// Canonical text form: nonzero dimensions and nonzero maps only.
pub fn write_pmod(m: &PersistenceModule) -> String {
    let p = m.poset();
    let mut s = String::new();
    writeln!(s, "field {}", m.field().p()).unwrap();
    writeln!(s, "over {}", p.name()).unwrap();
    for a in 0..p.n() {
        if m.dim(a) > 0 {
            writeln!(s, "dim {} {}", p.label(a), m.dim(a)).unwrap();
        }
    }
    for (&(a, b), mat) in p.covers().iter().zip(m.maps()) {
        if !mat.is_zero() {
            writeln!(s, "map {} {} : {}", p.label(a), p.label(b), mat).unwrap();
        }
    }
    s
}
