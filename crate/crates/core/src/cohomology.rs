//! Mod-2 cohomology of a real Bott manifold.
//!
//! `H*(M(A); Z/2)` is the quotient of `Z/2[x_1, ..., x_n]` by the relations
//! `x_j^2 = x_j * sum_i a_ij x_i`. Every element has a unique normal form as a
//! sum of square-free monomials, which is the only representation exposed
//! here; monomials with repeated factors exist only while a product is being
//! reduced.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bott_matrix::{BottMatrix, MAX_DIMENSION};
use crate::error::{ParseError, ParseErrorKind};

/// A square-free monomial `x_{i_1} ... x_{i_k}`, stored as a bitmask with bit
/// `i - 1` standing for `x_i`.
///
/// Ordered by degree, then lexicographically by increasing index sequence,
/// so `x1*x2 < x1*x3 < x2*x3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// The generator `x_i`. Panics unless `1 <= i <= 64`.
    pub fn var(i: usize) -> Self {
        assert!((1..=MAX_DIMENSION).contains(&i), "generator index {i} out of range");
        Monomial(1 << (i - 1))
    }

    pub fn from_mask(mask: u64) -> Self {
        Monomial(mask)
    }

    /// Product of distinct generators. Returns `None` on a repeated or zero
    /// index, or one above 64.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut mask = 0u64;
        for &i in indices {
            if i == 0 || i > MAX_DIMENSION || mask >> (i - 1) & 1 == 1 {
                return None;
            }
            mask |= 1 << (i - 1);
        }
        Some(Monomial(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Generator indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        bits(self.0).map(|b| b + 1).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_DIMENSION).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    /// Largest generator index, 0 for the unit.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // Equal degrees: whoever owns the lowest differing index is
                // lexicographically first.
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for (pos, b) in bits(self.0).enumerate() {
            if pos > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{}", b + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of the cohomology ring in normal form: a set of square-free
/// monomials with coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Z2Polynomial {
    terms: BTreeSet<Monomial>,
}

impl Z2Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Monomial::ONE)
    }

    pub fn var(i: usize) -> Self {
        Self::from(Monomial::var(i))
    }

    /// Sum of monomials; repeated monomials cancel in pairs.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(monomials: I) -> Self {
        let mut p = Self::zero();
        for m in monomials {
            p.toggle(m);
        }
        p
    }

    /// Adds a single monomial.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.terms.contains(&m)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = Monomial> + ExactSizeIterator + '_ {
        self.terms.iter().copied()
    }

    /// The degree-`k` component.
    pub fn homogeneous_part(&self, k: usize) -> Self {
        Self { terms: self.terms.iter().copied().filter(|m| m.degree() == k).collect() }
    }

    /// True when every term has degree `k`. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms.iter().all(|m| m.degree() == k)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.iter().next_back().map(|m| m.degree())
    }

    /// Sorted lists of generator indices, one per term.
    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.terms.iter().map(|m| m.indices()).collect()
    }

    pub fn from_index_lists(lists: &[Vec<usize>]) -> Option<Self> {
        let mut p = Self::zero();
        for l in lists {
            let m = Monomial::from_indices(l)?;
            if p.terms.contains(&m) {
                return None;
            }
            p.terms.insert(m);
        }
        Some(p)
    }
}

impl From<Monomial> for Z2Polynomial {
    fn from(m: Monomial) -> Self {
        Self { terms: BTreeSet::from([m]) }
    }
}

impl FromIterator<Monomial> for Z2Polynomial {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        Self::from_monomials(iter)
    }
}

impl AddAssign<&Z2Polynomial> for Z2Polynomial {
    fn add_assign(&mut self, rhs: &Z2Polynomial) {
        for &m in &rhs.terms {
            self.toggle(m);
        }
    }
}

impl AddAssign for Z2Polynomial {
    fn add_assign(&mut self, rhs: Z2Polynomial) {
        *self += &rhs;
    }
}

impl Add for &Z2Polynomial {
    type Output = Z2Polynomial;

    fn add(self, rhs: &Z2Polynomial) -> Z2Polynomial {
        Z2Polynomial { terms: self.terms.symmetric_difference(&rhs.terms).copied().collect() }
    }
}

impl Add for Z2Polynomial {
    type Output = Z2Polynomial;

    fn add(mut self, rhs: Z2Polynomial) -> Z2Polynomial {
        self += &rhs;
        self
    }
}

impl std::iter::Sum for Z2Polynomial {
    fn sum<I: Iterator<Item = Z2Polynomial>>(iter: I) -> Self {
        iter.fold(Z2Polynomial::zero(), |acc, p| acc + p)
    }
}

impl fmt::Display for Z2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (pos, m) in self.terms.iter().enumerate() {
            if pos > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reads sums like `x1*x2 + x3`, `x2x3x4x5+x1x3x4x5`, `0` or `1`.
///
/// Whitespace and `*` are optional. A generator repeated inside one term is
/// rejected, since squares need a ring to reduce in. Repeated terms cancel.
impl FromStr for Z2Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: String| ParseError::new(1, 1, ParseErrorKind::Polynomial(msg));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input".into()));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for term in compact.split('+') {
            if term == "1" {
                p.toggle(Monomial::ONE);
                continue;
            }
            let mut mask = 0u64;
            let mut rest = term;
            if rest.is_empty() {
                return Err(bad(format!("empty term in {s:?}")));
            }
            while !rest.is_empty() {
                rest = rest.strip_prefix('*').unwrap_or(rest);
                rest = rest.strip_prefix('x').ok_or_else(|| bad(format!("expected 'x' in term {term:?}")))?;
                let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
                let i: usize = rest[..digits].parse().map_err(|_| bad(format!("missing index in term {term:?}")))?;
                if i == 0 || i > MAX_DIMENSION {
                    return Err(bad(format!("index {i} out of range")));
                }
                if mask >> (i - 1) & 1 == 1 {
                    return Err(bad(format!("x{i} repeated in term {term:?}")));
                }
                mask |= 1 << (i - 1);
                rest = &rest[digits..];
            }
            p.toggle(Monomial(mask));
        }
        Ok(p)
    }
}

impl Serialize for Z2Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_index_lists().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Z2Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let lists = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Z2Polynomial::from_index_lists(&lists)
            .ok_or_else(|| D::Error::custom("terms must be distinct sets of distinct indices in 1..=64"))
    }
}

/// Arithmetic in `H*(M(A); Z/2)` for a fixed Bott matrix.
#[derive(Clone, Debug)]
pub struct CohomologyRing {
    n: usize,
    /// `columns[j - 1]` has bit `i - 1` set iff `a_ij = 1`.
    columns: Vec<u64>,
}

impl CohomologyRing {
    pub fn new(matrix: &BottMatrix) -> Self {
        let n = matrix.dim();
        Self { n, columns: (1..=n).map(|j| matrix.column(j)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Generator `x_i`. Panics unless `1 <= i <= n`.
    pub fn generator(&self, i: usize) -> Z2Polynomial {
        assert!((1..=self.n).contains(&i), "generator index {i} outside 1..={}", self.n);
        Z2Polynomial::var(i)
    }

    /// Linear form `sum_{i : a_ij = 1} x_i`, the right-hand factor of the
    /// relation for `x_j^2`.
    pub fn column_form(&self, j: usize) -> Z2Polynomial {
        bits(self.columns[j - 1]).map(|b| Monomial(1 << b)).collect()
    }

    /// Normal form of `x_j^2`.
    pub fn reduce_square(&self, j: usize) -> Z2Polynomial {
        let mut exps = vec![0u32; self.n];
        exps[j - 1] = 2;
        self.reduce_exponents(&exps)
    }

    /// Normal form of `x_1^{e_1} ... x_n^{e_n}`, with `exponents[i - 1] = e_i`.
    ///
    /// Panics if `exponents` is longer than `n`; missing trailing entries
    /// count as zero.
    pub fn reduce_exponents(&self, exponents: &[u32]) -> Z2Polynomial {
        assert!(exponents.len() <= self.n, "{} exponents for {} generators", exponents.len(), self.n);
        let mut exps = exponents.to_vec();
        exps.resize(self.n, 0);
        let mut out = Z2Polynomial::zero();
        self.reduce_into(PowerProduct(exps), &mut out);
        out
    }

    /// Product of two normal forms, in normal form.
    pub fn multiply(&self, p: &Z2Polynomial, q: &Z2Polynomial) -> Z2Polynomial {
        let mut out = Z2Polynomial::zero();
        for a in p.terms() {
            for b in q.terms() {
                self.multiply_monomials_into(a, b, &mut out);
            }
        }
        out
    }

    pub fn multiply_monomials(&self, a: Monomial, b: Monomial) -> Z2Polynomial {
        let mut out = Z2Polynomial::zero();
        self.multiply_monomials_into(a, b, &mut out);
        out
    }

    /// Product of several factors; the empty product is 1.
    pub fn product<'a, I: IntoIterator<Item = &'a Z2Polynomial>>(&self, factors: I) -> Z2Polynomial {
        factors.into_iter().fold(Z2Polynomial::one(), |acc, f| self.multiply(&acc, f))
    }

    fn multiply_monomials_into(&self, a: Monomial, b: Monomial, out: &mut Z2Polynomial) {
        if a.degree() + b.degree() > self.n {
            // Normal forms have degree at most n.
            return;
        }
        let squared = a.0 & b.0;
        if squared == 0 {
            out.toggle(Monomial(a.0 | b.0));
            return;
        }
        let mut exps = vec![0u32; self.n];
        for i in bits(a.0) {
            exps[i] += 1;
        }
        for i in bits(b.0) {
            exps[i] += 1;
        }
        self.reduce_into(PowerProduct(exps), out);
    }

    /// Rewrites a power product into normal form, adding the result to `out`.
    ///
    /// Each round takes the largest index `j` with exponent `e >= 2` and
    /// replaces `x_j^e` by `x_j * (sum_{i : a_ij = 1} x_i)^(e - 1)`. Since
    /// `a_ij = 1` forces `i < j`, every power product left after the round has
    /// its largest repeated index strictly below `j`.
    fn reduce_into(&self, start: PowerProduct, out: &mut Z2Polynomial) {
        let mut stack = vec![start];
        while let Some(pp) = stack.pop() {
            let Some(j) = pp.largest_repeated() else {
                out.toggle(pp.to_monomial());
                continue;
            };
            let column = self.columns[j];
            if column == 0 {
                continue;
            }
            let e = pp.0[j];
            let mut front = vec![pp];
            front[0].0[j] = 1;
            for _ in 1..e {
                front = front
                    .iter()
                    .flat_map(|t| {
                        bits(column).map(move |i| {
                            let mut next = t.clone();
                            next.0[i] += 1;
                            next
                        })
                    })
                    .collect();
            }
            debug_assert!(front.iter().all(|t| t.largest_repeated().is_none_or(|k| k < j)));
            stack.extend(front);
        }
    }
}

/// A monomial that may have repeated factors; `0[i]` is the exponent of
/// `x_{i+1}`.
#[derive(Clone, Debug)]
struct PowerProduct(Vec<u32>);

impl PowerProduct {
    /// 0-based index of the largest generator with exponent at least 2.
    fn largest_repeated(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e >= 2)
    }

    fn to_monomial(&self) -> Monomial {
        Monomial(self.0.iter().enumerate().filter(|(_, &e)| e == 1).fold(0, |acc, (i, _)| acc | 1 << i))
    }
}

/// Square-free monomials of degree `k` in `x_1..x_n`, in canonical order.
/// Empty when `k > n`.
pub fn basis(n: usize, k: usize) -> Vec<Monomial> {
    k_subsets(n, k).into_iter().map(Monomial).collect()
}

/// Bitmasks of the `k`-element subsets of `{0..n}`, lexicographic in the
/// increasing index sequence.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    fn go(start: usize, n: usize, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=n - k {
            go(i + 1, n, k - 1, acc | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, 0, &mut out);
    }
    out
}

/// Set bit positions of `mask`, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
