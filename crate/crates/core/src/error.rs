use thiserror::Error;

/// Errors raised by the library.
///
/// Parse failures carry a 1-based line number; every other variant names the
/// precondition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("DuplicateLabel: `{0}` appears more than once")]
    DuplicateLabel(String),
    #[error("UnknownLabel: `{0}` is not an element")]
    UnknownLabel(String),
    #[error("CycleDetected: `{0}` and `{1}` lie on a cycle")]
    CycleDetected(String, String),
    #[error("NotInterval: {0}")]
    NotInterval(String),
    #[error("NotComparable: `{0}` is not below `{1}`")]
    NotComparable(String, String),
    #[error("NotInteriorSystem: no maximum of Q below `{0}`")]
    NotInteriorSystem(String),
    #[error("NotAligned: the interior system is not aligned")]
    NotAligned,
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("FieldMismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u8, u8),
    #[error("NotPrime: {0} is not a prime below 256")]
    NotPrime(u32),
    #[error("PosetMismatch: modules live over different posets")]
    PosetMismatch,
    #[error("NonCommutativeModule: paths from `{0}` to `{1}` disagree")]
    NonCommutativeModule(String, String),
    #[error("NotNatural: morphism fails naturality on cover `{0}` -> `{1}`")]
    NotNatural(String, String),
    #[error("Disconnected: the poset is not connected")]
    Disconnected,
    #[error("EmptyPoset: the poset has no elements")]
    EmptyPoset,
    #[error("NotTree: the Hasse diagram is not a tree")]
    NotTree,
    #[error("MaxLenExceeded: resolution longer than {0}")]
    MaxLenExceeded(usize),
    #[error("SegmentTooShort: segment has {0} elements, at least 4 needed")]
    SegmentTooShort(usize),
    #[error("NotSegment: {0}")]
    NotSegment(String),
    #[error("HypothesisUnmet: segment is neither equioriented nor ends in a leaf")]
    HypothesisUnmet,
    #[error("NotExtremal: `{0}` is neither a sink nor a source")]
    NotExtremal(String),
    #[error("InvalidLength: edge `{0}`-`{1}` has length {2}, at least 2 needed")]
    InvalidLength(String, String, usize),
    #[error("UnorientedLine: line `{0}`-`{1}` has no orientation")]
    UnorientedLine(String, String),
    #[error("NotHasse: {0}")]
    NotHasse(String),
    #[error("NoOracle: {0}")]
    NoOracle(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    /// True for errors produced while reading text input.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
