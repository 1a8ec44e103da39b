//! Text formats: posets, modules, matrix literals, diagrams, DOT and JSON.
//!
//! All parsers strip `#` comments and blank lines and report errors with
//! 1-based line numbers.

mod diagram_fmt;
mod dot;
pub mod json;
mod matrix_lit;
mod pmod_fmt;
mod poset_fmt;

pub use diagram_fmt::{parse_diagram, write_diagram};
pub use dot::to_dot;
pub use matrix_lit::parse_matrix;
pub use pmod_fmt::{parse_pmod, parse_pmod_header, write_pmod, PmodHeader};
pub use poset_fmt::{parse_poset, write_poset};

/// Non-empty lines with comments removed, paired with their line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}
