//! Exact affine model of the Bieberbach group `Γ(A)`.
//!
//! `Γ(A)` is generated by the isometries `s_i = (D_i, e_i / 2)` of `R^n`,
//! where `D_i` is diagonal with entry `(-1)^{a_ij}` at position `j` (so
//! `+1` at positions `j <= i`). All arithmetic is exact: translations are
//! dyadic rationals and linear parts are sign masks.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::bott_matrix::BottMatrix;
use crate::error::BottError;

/// An exact rational `num / 2^shift`, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    num: i64,
    shift: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, shift: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, shift: 0 };
    pub const HALF: Dyadic = Dyadic { num: 1, shift: 1 };

    pub fn new(num: i64, shift: u32) -> Self {
        let mut d = Dyadic { num, shift };
        d.normalize();
        d
    }

    pub fn integer(v: i64) -> Self {
        Dyadic { num: v, shift: 0 }
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn denominator(self) -> i64 {
        1 << self.shift
    }

    pub fn is_integer(self) -> bool {
        self.shift == 0
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.shift = 0;
            return;
        }
        let twos = self.num.trailing_zeros().min(self.shift);
        self.num >>= twos;
        self.shift -= twos;
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        let shift = self.shift.max(rhs.shift);
        let a = self.num.checked_shl(shift - self.shift).expect("dyadic overflow");
        let b = rhs.num.checked_shl(shift - rhs.shift).expect("dyadic overflow");
        Dyadic::new(a.checked_add(b).expect("dyadic overflow"), shift)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, shift: self.shift }
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + -rhs
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.denominator())
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An isometry `x -> D x + t` of `R^n` with `D` diagonal, entries `±1`.
///
/// `D` is stored as a mask: bit `j - 1` set means `D_jj = -1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    n: usize,
    flips: u64,
    trans: Vec<Dyadic>,
}

impl AffineMap {
    pub fn identity(n: usize) -> Self {
        Self { n, flips: 0, trans: vec![Dyadic::ZERO; n] }
    }

    pub fn translation(trans: Vec<Dyadic>) -> Self {
        Self { n: trans.len(), flips: 0, trans }
    }

    /// Translation by the standard basis vector `e_i` (1-based).
    pub fn lattice_translation(n: usize, i: usize) -> Self {
        let mut trans = vec![Dyadic::ZERO; n];
        trans[i - 1] = Dyadic::ONE;
        Self::translation(trans)
    }

    pub fn from_parts(flips: u64, trans: Vec<Dyadic>) -> Self {
        let n = trans.len();
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self { n, flips: flips & mask, trans }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Sign mask of the linear part.
    pub fn flips(&self) -> u64 {
        self.flips
    }

    /// Diagonal of the linear part as `±1` entries.
    pub fn diag(&self) -> Vec<i8> {
        (0..self.n).map(|j| if self.flips >> j & 1 == 1 { -1 } else { 1 }).collect()
    }

    pub fn translation_part(&self) -> &[Dyadic] {
        &self.trans
    }

    pub fn is_translation(&self) -> bool {
        self.flips == 0
    }

    pub fn is_identity(&self) -> bool {
        self.flips == 0 && self.trans.iter().all(|t| *t == Dyadic::ZERO)
    }

    fn sign(&self, j: usize) -> bool {
        self.flips >> j & 1 == 1
    }

    /// `self ∘ other`: `(D1, t1)(D2, t2) = (D1 D2, D1 t2 + t1)`.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap, BottError> {
        if self.n != other.n {
            return Err(BottError::DimensionMismatch { left: self.n, right: other.n });
        }
        let trans = (0..self.n)
            .map(|j| {
                let moved = if self.sign(j) { -other.trans[j] } else { other.trans[j] };
                moved + self.trans[j]
            })
            .collect();
        Ok(AffineMap { n: self.n, flips: self.flips ^ other.flips, trans })
    }

    /// `(D, t)^{-1} = (D, -D t)`, using `D^{-1} = D`.
    pub fn inverse(&self) -> AffineMap {
        let trans = (0..self.n)
            .map(|j| if self.sign(j) { self.trans[j] } else { -self.trans[j] })
            .collect();
        AffineMap { n: self.n, flips: self.flips, trans }
    }

    /// `D v` for an integer vector `v`.
    pub fn apply_linear(&self, v: &[i64]) -> Vec<i64> {
        v.iter().enumerate().map(|(j, &x)| if self.sign(j) { -x } else { x }).collect()
    }

    pub fn conjugate(&self, other: &AffineMap) -> Result<AffineMap, BottError> {
        self.compose(other)?.compose(&self.inverse())
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let diag: Vec<String> = self.diag().iter().map(|d| format!("{d:+}")).collect();
        let t: Vec<String> = self.trans.iter().map(Dyadic::to_string).collect();
        write!(f, "(diag: [{}], t: [{}])", diag.join(","), t.join(","))
    }
}

impl fmt::Debug for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The generator `s_i` of `Γ(A)`.
pub fn generator(matrix: &BottMatrix, i: usize) -> Result<AffineMap, BottError> {
    let n = matrix.dim();
    if i == 0 || i > n {
        return Err(BottError::IndexOutOfRange { index: i, n });
    }
    let mut trans = vec![Dyadic::ZERO; n];
    trans[i - 1] = Dyadic::HALF;
    Ok(AffineMap { n, flips: matrix.row(i), trans })
}

pub fn generators(matrix: &BottMatrix) -> Vec<AffineMap> {
    (1..=matrix.dim()).map(|i| generator(matrix, i).expect("index in range")).collect()
}

/// Every `s_i^2` is the translation by `e_i`, and the squares commute
/// pairwise.
pub fn check_lattice(matrix: &BottMatrix) -> bool {
    let n = matrix.dim();
    let squares: Vec<AffineMap> = generators(matrix)
        .iter()
        .map(|s| s.compose(s).expect("same dimension"))
        .collect();
    let translations_ok = squares
        .iter()
        .enumerate()
        .all(|(i, sq)| *sq == AffineMap::lattice_translation(n, i + 1));
    let commute = squares.iter().enumerate().all(|(i, a)| {
        squares[i + 1..].iter().all(|b| a.compose(b).ok() == b.compose(a).ok())
    });
    translations_ok && commute
}

/// Conjugating the lattice translation `t_{e_j}` by any generator `s_i`
/// gives the translation by `D_i e_j`.
pub fn check_conjugation(matrix: &BottMatrix) -> bool {
    let n = matrix.dim();
    generators(matrix).iter().all(|s| {
        (1..=n).all(|j| {
            let t = AffineMap::lattice_translation(n, j);
            let mut e = vec![0i64; n];
            e[j - 1] = 1;
            let expected = AffineMap::translation(s.apply_linear(&e).into_iter().map(Dyadic::integer).collect());
            s.conjugate(&t).ok() == Some(expected)
        })
    })
}

/// The finite group of diagonal sign matrices generated by the linear parts
/// of `s_1, ..., s_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyGroup {
    n: usize,
    elements: BTreeSet<u64>,
}

impl HolonomyGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements as `±1` diagonals, in increasing mask order.
    pub fn elements(&self) -> Vec<Vec<i8>> {
        self.elements
            .iter()
            .map(|&m| (0..self.n).map(|j| if m >> j & 1 == 1 { -1 } else { 1 }).collect())
            .collect()
    }

    pub fn contains(&self, diag: &[i8]) -> bool {
        diag.len() == self.n
            && self
                .elements
                .contains(&diag.iter().enumerate().filter(|(_, &d)| d < 0).fold(0, |m, (j, _)| m | 1 << j))
    }
}

/// Closes the linear parts of the generators under composition.
pub fn holonomy_image(matrix: &BottMatrix) -> HolonomyGroup {
    let gens: Vec<u64> = generators(matrix).iter().map(AffineMap::flips).filter(|&f| f != 0).collect();
    let mut elements = BTreeSet::from([0u64]);
    let mut frontier = vec![0u64];
    while let Some(g) = frontier.pop() {
        for &h in &gens {
            // Product of diagonal sign matrices is the XOR of their masks.
            if elements.insert(g ^ h) {
                frontier.push(g ^ h);
            }
        }
    }
    HolonomyGroup { n: matrix.dim(), elements }
}
