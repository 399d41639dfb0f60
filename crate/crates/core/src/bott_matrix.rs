//! Bott matrices: strictly upper-triangular binary matrices.
//!
//! Rows and columns are indexed from 1, matching the usual notation
//! `A = [a_ij]`. Each row is packed into a `u64`, bit `j - 1` holding
//! `a_ij`, which caps the dimension at 64.
//!
//! Two interchange formats are supported:
//!
//! ```text
//! 0110
//! 0011
//! 0001
//! 0000
//! ```
//!
//! one row per line with no separators, and the JSON form
//! `{"n": 4, "rows": [[2, 3], [3, 4], [4], []]}` listing the set columns of
//! each row.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BottError, ParseError, ParseErrorKind};

/// Largest supported dimension. One matrix row must fit in a machine word.
pub const MAX_DIMENSION: usize = 64;

/// Default cap on `n(n-1)/2` for [`enumerate`], i.e. `n <= 8`.
pub const DEFAULT_ENUMERATION_BITS: u32 = 28;

/// An `n x n` strictly upper-triangular matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BottMatrix {
    n: usize,
    rows: Vec<u64>,
}

impl BottMatrix {
    /// Builds a matrix from a list of 1-based `(row, col)` positions.
    ///
    /// Listing the same position twice is allowed and sets it once.
    pub fn new(n: usize, entries: &[(usize, usize)]) -> Result<Self, BottError> {
        let mut matrix = Self::zero(n)?;
        for &(row, col) in entries {
            if row == 0 || row > n || col == 0 || col > n {
                return Err(BottError::IndexOutOfRange { index: row.max(col), n });
            }
            if row >= col {
                return Err(BottError::NotStrictlyUpper { row, col });
            }
            matrix.rows[row - 1] |= 1 << (col - 1);
        }
        Ok(matrix)
    }

    /// The zero matrix, whose manifold is the torus `T^n`.
    pub fn zero(n: usize) -> Result<Self, BottError> {
        check_dimension(n)?;
        Ok(Self { n, rows: vec![0; n] })
    }

    /// Builds a matrix from packed rows. Bit `j - 1` of `rows[i - 1]` is `a_ij`.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, BottError> {
        let n = rows.len();
        check_dimension(n)?;
        for (i, &row) in rows.iter().enumerate() {
            // Row i+1 may only use columns i+2..=n, i.e. bits i+1..n.
            let allowed = upper_mask(i + 1, n);
            if row & !allowed != 0 {
                let bad = (row & !allowed).trailing_zeros() as usize + 1;
                return if bad > n {
                    Err(BottError::IndexOutOfRange { index: bad, n })
                } else {
                    Err(BottError::NotStrictlyUpper { row: i + 1, col: bad })
                };
            }
        }
        Ok(Self { n, rows })
    }

    /// Decodes the flattened strictly-upper triangle, row-major, with the
    /// entry `a_12` as the most significant of the `n(n-1)/2` bits.
    ///
    /// This is the inverse of [`BottMatrix::upper_bits`] and fixes the order
    /// used by [`enumerate`].
    pub fn from_upper_bits(n: usize, bits: u64) -> Result<Self, BottError> {
        check_dimension(n)?;
        let width = triangle_bits(n);
        if width > 64 || (width < 64 && bits >> width != 0) {
            return Err(BottError::EnumerationCap { n, bits: width, cap: 64 });
        }
        let mut rows = vec![0u64; n];
        let mut pos = width;
        for (i, row) in rows.iter_mut().enumerate() {
            for j in i + 1..n {
                pos -= 1;
                if bits >> pos & 1 == 1 {
                    *row |= 1 << j;
                }
            }
        }
        Ok(Self { n, rows })
    }

    /// Inverse of [`BottMatrix::from_upper_bits`]. Panics if `n(n-1)/2 > 64`.
    pub fn upper_bits(&self) -> u64 {
        let width = triangle_bits(self.n);
        assert!(width <= 64, "triangle of a {0}x{0} matrix does not fit in u64", self.n);
        let mut bits = 0u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                bits = bits << 1 | (self.rows[i] >> j & 1);
            }
        }
        bits
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry `a_ij` with 1-based indices. Out-of-range positions read as 0.
    pub fn get(&self, i: usize, j: usize) -> bool {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return false;
        }
        self.rows[i - 1] >> (j - 1) & 1 == 1
    }

    /// Packed row `i` (1-based): bit `j - 1` is `a_ij`.
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i - 1]
    }

    /// Packed column `j` (1-based): bit `i - 1` is `a_ij`.
    pub fn column(&self, j: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, &row)| row >> (j - 1) & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Keeps the rows listed in `rows` (1-based) and zeroes all others.
    ///
    /// The result has the same dimension; it is the matrix of the
    /// elementary component indexed by `rows`.
    pub fn row_submatrix(&self, rows: &[usize]) -> Result<Self, BottError> {
        let mut keep = 0u64;
        for &i in rows {
            if i == 0 || i > self.n {
                return Err(BottError::IndexOutOfRange { index: i, n: self.n });
            }
            keep |= 1 << (i - 1);
        }
        Ok(self.masked_rows(keep))
    }

    /// Like [`BottMatrix::row_submatrix`] with the row set given as a bitmask.
    pub fn masked_rows(&self, keep: u64) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &row)| if keep >> i & 1 == 1 { row } else { 0 })
            .collect();
        Self { n: self.n, rows }
    }

    /// Every row has an even number of ones.
    pub fn is_orientable(&self) -> bool {
        self.rows.iter().all(|r| r.count_ones() % 2 == 0)
    }

    /// Number of nonzero rows.
    pub fn holonomy_rank(&self) -> usize {
        self.rows.iter().filter(|&&r| r != 0).count()
    }

    /// Rank of the matrix over GF(2).
    pub fn gf2_rank(&self) -> usize {
        let mut pivots: Vec<u64> = Vec::new();
        for &row in &self.rows {
            let mut r = row;
            for &p in &pivots {
                // Pivots are kept with distinct leading bits in decreasing order.
                if r & (1 << (63 - p.leading_zeros())) != 0 {
                    r ^= p;
                }
            }
            if r != 0 {
                pivots.push(r);
                pivots.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        pivots.len()
    }

    /// Renders in the line-per-row text format, each row newline-terminated.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.n * (self.n + 1));
        for &row in &self.rows {
            for j in 0..self.n {
                out.push(if row >> j & 1 == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the line-per-row text format.
    pub fn parse_text(text: &str) -> Result<Self, ParseError> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let body = body.strip_suffix('\r').unwrap_or(body);
        if body.is_empty() {
            return Err(ParseError::new(1, 1, ParseErrorKind::Empty));
        }
        let lines: Vec<&str> = body.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect();
        let n = lines.len();
        if n > MAX_DIMENSION {
            return Err(ParseError::new(1, 1, ParseErrorKind::DimensionTooLarge(n)));
        }
        let mut rows = vec![0u64; n];
        for (i, line) in lines.iter().enumerate() {
            let width = line.chars().count();
            if width != n {
                let kind = if i == 0 {
                    ParseErrorKind::NotSquare { rows: n, width }
                } else {
                    ParseErrorKind::Ragged { expected: n, found: width }
                };
                return Err(ParseError::new(i + 1, width.min(n) + 1, kind));
            }
            for (j, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' if j > i => rows[i] |= 1 << j,
                    '1' => return Err(ParseError::new(i + 1, j + 1, ParseErrorKind::LowerTriangle)),
                    other => return Err(ParseError::new(i + 1, j + 1, ParseErrorKind::BadCharacter(other))),
                }
            }
        }
        Ok(Self { n, rows })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization cannot fail")
    }

    pub fn parse_json(text: &str) -> Result<Self, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.column(), ParseErrorKind::Json(e.to_string())))
    }

    /// Accepts either format, choosing JSON when the first non-blank
    /// character is `{`.
    pub fn parse_any(text: &str) -> Result<Self, ParseError> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }
}

impl fmt::Debug for BottMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BottMatrix({}; ", self.n)?;
        let rows: Vec<String> = self.to_text().lines().map(str::to_owned).collect();
        write!(f, "{})", rows.join("/"))
    }
}

impl fmt::Display for BottMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for BottMatrix {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_any(s)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonMatrix {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl Serialize for BottMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows = self
            .rows
            .iter()
            .map(|&row| (0..self.n).filter(|&j| row >> j & 1 == 1).map(|j| j + 1).collect())
            .collect();
        JsonMatrix { n: self.n, rows }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BottMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = JsonMatrix::deserialize(deserializer)?;
        if raw.rows.len() != raw.n {
            return Err(D::Error::custom(format!("expected {} rows, found {}", raw.n, raw.rows.len())));
        }
        let entries: Vec<(usize, usize)> = raw
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, cols)| cols.iter().map(move |&j| (i + 1, j)))
            .collect();
        BottMatrix::new(raw.n, &entries).map_err(D::Error::custom)
    }
}

fn check_dimension(n: usize) -> Result<(), BottError> {
    if n == 0 {
        Err(BottError::EmptyDimension)
    } else if n > MAX_DIMENSION {
        Err(BottError::DimensionTooLarge { n, max: MAX_DIMENSION })
    } else {
        Ok(())
    }
}

/// Bits `from..n` set.
fn upper_mask(from: usize, n: usize) -> u64 {
    let below_n = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let below_from = if from >= 64 { u64::MAX } else { (1u64 << from) - 1 };
    below_n & !below_from
}

/// Number of free entries, `n(n-1)/2`.
pub fn triangle_bits(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// All Bott matrices of dimension `n`, with the default cap (`n <= 8`).
pub fn enumerate(n: usize) -> Result<Enumeration, BottError> {
    enumerate_with_cap(n, DEFAULT_ENUMERATION_BITS)
}

/// All Bott matrices of dimension `n`, refusing when `n(n-1)/2 > cap_bits`.
///
/// Matrices come in lexicographic order of the flattened upper triangle,
/// row-major, starting from the zero matrix.
pub fn enumerate_with_cap(n: usize, cap_bits: u32) -> Result<Enumeration, BottError> {
    check_dimension(n)?;
    let bits = triangle_bits(n);
    if bits > cap_bits.min(63) {
        return Err(BottError::EnumerationCap { n, bits, cap: cap_bits.min(63) });
    }
    Ok(Enumeration { n, next: 0, end: 1u64 << bits })
}

/// Iterator returned by [`enumerate`].
#[derive(Clone, Debug)]
pub struct Enumeration {
    n: usize,
    next: u64,
    end: u64,
}

impl Enumeration {
    /// Total number of matrices this stream yields from the start.
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for Enumeration {
    type Item = BottMatrix;

    fn next(&mut self) -> Option<BottMatrix> {
        if self.next == self.end {
            return None;
        }
        let m = BottMatrix::from_upper_bits(self.n, self.next).expect("index below 2^bits");
        self.next += 1;
        Some(m)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }

    fn nth(&mut self, k: usize) -> Option<BottMatrix> {
        self.next = self.next.saturating_add(k as u64).min(self.end);
        self.next()
    }
}

impl ExactSizeIterator for Enumeration {}
