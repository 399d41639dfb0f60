use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BottError {
    #[error("dimension must be at least 1")]
    EmptyDimension,
    #[error("dimension {n} exceeds the supported maximum of {max}")]
    DimensionTooLarge { n: usize, max: usize },
    #[error("entry ({row}, {col}) is not strictly above the diagonal")]
    NotStrictlyUpper { row: usize, col: usize },
    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("enumerating n = {n} needs {bits} free entries, above the cap of {cap}")]
    EnumerationCap { n: usize, bits: u32, cap: u32 },
    #[error("degree {degree} is outside the valid range {min}..={max}")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("input is empty")]
    Empty,
    #[error("{rows} rows but the first row has {width} entries")]
    NotSquare { rows: usize, width: usize },
    #[error("expected {expected} entries, found {found}")]
    Ragged { expected: usize, found: usize },
    #[error("unexpected character {0:?}, expected '0' or '1'")]
    BadCharacter(char),
    #[error("entry on or below the diagonal is 1")]
    LowerTriangle,
    #[error("dimension {0} exceeds the supported maximum")]
    DimensionTooLarge(usize),
    #[error("{0}")]
    Json(String),
    #[error("malformed polynomial: {0}")]
    Polynomial(String),
}

/// A parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        Self { line, column, kind }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.kind)
    }
}

impl std::error::Error for ParseError {}
