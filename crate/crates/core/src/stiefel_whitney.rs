//! Stiefel-Whitney classes of real Bott manifolds.
//!
//! The line class `y_j` is the linear form read off column `j` of the Bott
//! matrix, and the total class is `w = (1 + y_1)(1 + y_2)...(1 + y_n)`
//! reduced in the cohomology ring. Column 1 of a Bott matrix is always
//! empty, so `y_1 = 0`.
//!
//! The even classes decompose over elementary components: `w_{2k}(M(A))` is
//! the sum of `w_{2k}(M(A_S))` over all `2k`-element row sets `S`, where
//! `A_S` keeps only the rows in `S`. [`decomposition_sum`] evaluates both
//! sides, identifying the cohomology rings of the different `A_S` through
//! their common square-free monomial basis.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bott_matrix::BottMatrix;
use crate::cohomology::{bits, k_subsets, CohomologyRing, Monomial, Z2Polynomial};
use crate::error::BottError;

/// `y_i = sum_{l : a_li = 1} x_l`.
pub fn line_class(matrix: &BottMatrix, i: usize) -> Result<Z2Polynomial, BottError> {
    let n = matrix.dim();
    if i == 0 || i > n {
        return Err(BottError::IndexOutOfRange { index: i, n });
    }
    Ok(bits(matrix.column(i)).map(|b| Monomial::from_mask(1 << b)).collect())
}

/// The graded total class `w_0 + w_1 + ... + w_n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TotalSwClass {
    pub n: usize,
    /// `components[k]` is `w_k`.
    pub components: Vec<Z2Polynomial>,
}

impl TotalSwClass {
    /// `w_k`, zero for `k > n`.
    pub fn get(&self, k: usize) -> Z2Polynomial {
        self.components.get(k).cloned().unwrap_or_default()
    }

    /// The sum of all components.
    pub fn total(&self) -> Z2Polynomial {
        self.components.iter().cloned().sum()
    }

    /// Every positive-degree class vanishes.
    pub fn is_trivial(&self) -> bool {
        self.components.iter().skip(1).all(Z2Polynomial::is_zero)
    }
}

impl fmt::Display for TotalSwClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.components.iter().enumerate() {
            writeln!(f, "w{k} = {w}")?;
        }
        write!(f, "w = {}", self.total())
    }
}

/// Computes `prod_j (1 + y_j)`, reducing after each factor.
pub fn total_sw(matrix: &BottMatrix) -> TotalSwClass {
    let n = matrix.dim();
    let ring = CohomologyRing::new(matrix);
    let mut w = Z2Polynomial::one();
    for j in 1..=n {
        let y = ring.column_form(j);
        if y.is_zero() {
            continue;
        }
        let shifted = ring.multiply(&w, &y);
        w += shifted;
    }
    let components = (0..=n).map(|k| w.homogeneous_part(k)).collect();
    TotalSwClass { n, components }
}

/// `w_k(M(A))`. Zero when `k > n`.
pub fn sw_class(matrix: &BottMatrix, k: usize) -> Z2Polynomial {
    if k > matrix.dim() {
        return Z2Polynomial::zero();
    }
    total_sw(matrix).get(k)
}

/// `w_k` as the elementary symmetric sum over all `k`-subsets `T` of
/// `prod_{j in T} y_j`, each product reduced separately.
///
/// Exponential in `n`; kept as a cross-check of [`sw_class`].
pub fn sw_class_naive(matrix: &BottMatrix, k: usize) -> Z2Polynomial {
    let n = matrix.dim();
    let ring = CohomologyRing::new(matrix);
    let ys: Vec<Z2Polynomial> = (1..=n).map(|j| ring.column_form(j)).collect();
    k_subsets(n, k)
        .into_iter()
        .map(|subset| ring.product(bits(subset).map(|b| &ys[b])))
        .sum()
}

/// `sum_i (row sum of row i mod 2) x_i`. Agrees with `w_1`.
pub fn w1_from_rows(matrix: &BottMatrix) -> Z2Polynomial {
    (1..=matrix.dim())
        .filter(|&i| matrix.row(i).count_ones() % 2 == 1)
        .map(Monomial::var)
        .collect()
}

/// One summand `w_{2k}(M(A_S))` of the decomposition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SubsetTerm {
    /// Row indices `S`, increasing.
    pub indices: Vec<usize>,
    pub w: Z2Polynomial,
}

/// Both sides of the decomposition of `w_{2k}` for one matrix.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub n: usize,
    /// Half the degree: the report is about `w_{2k}`.
    pub k: usize,
    pub matrix: BottMatrix,
    /// `w_{2k}(M(A))`.
    pub lhs: Z2Polynomial,
    /// Sum of all subset terms.
    pub rhs: Z2Polynomial,
    pub equal: bool,
    /// One entry per `2k`-subset, in lexicographic order.
    #[serde(rename = "subsets")]
    pub subset_terms: Vec<SubsetTerm>,
}

impl DecompositionReport {
    pub fn degree(&self) -> usize {
        2 * self.k
    }

    /// Rechecks the stored fields against each other: `rhs` is the sum of
    /// the subset terms, and `lhs == rhs`. A report straight out of
    /// [`decomposition_sum`] is consistent exactly when `equal` is set.
    pub fn holds(&self) -> bool {
        let recomputed: Z2Polynomial = self.subset_terms.iter().map(|t| t.w.clone()).sum();
        self.equal && recomputed == self.rhs && self.lhs == self.rhs
    }

    /// Subset terms worth printing: those with a nonzero class, and those
    /// whose rows are all nonzero in the matrix.
    pub fn notable_terms(&self) -> impl Iterator<Item = &SubsetTerm> {
        self.subset_terms
            .iter()
            .filter(|t| !t.w.is_zero() || t.indices.iter().all(|&i| self.matrix.row(i) != 0))
    }
}

fn subset_label(indices: &[usize], n: usize) -> String {
    let sep = if n >= 10 { "," } else { "" };
    let parts: Vec<String> = indices.iter().map(usize::to_string).collect();
    parts.join(sep)
}

impl fmt::Display for DecompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        writeln!(f, "w{d} decomposition (k = {}, n = {})", self.k, self.n)?;
        let mut shown = 0;
        for t in self.notable_terms() {
            writeln!(f, "  w{d}(A_{}) = {}", subset_label(&t.indices, self.n), t.w)?;
            shown += 1;
        }
        let hidden = self.subset_terms.len() - shown;
        if hidden > 0 {
            writeln!(f, "  ({hidden} other subsets contribute 0)")?;
        }
        writeln!(f, "  sum   = {}", self.rhs)?;
        writeln!(f, "  w{d}(A) = {}", self.lhs)?;
        write!(f, "  equal: {}", if self.equal { "yes" } else { "NO" })
    }
}

/// Evaluates both sides of the decomposition of `w_{2k}(M(A))`.
///
/// For `2k > n` there are no subsets and both sides are zero. `k = 0` is
/// rejected.
pub fn decomposition_sum(matrix: &BottMatrix, k: usize) -> Result<DecompositionReport, BottError> {
    let n = matrix.dim();
    if k == 0 {
        return Err(BottError::DegreeOutOfRange { degree: 0, min: 2, max: n });
    }
    let degree = 2 * k;
    let subset_terms: Vec<SubsetTerm> = k_subsets(n, degree)
        .into_par_iter()
        .map(|mask| SubsetTerm {
            indices: bits(mask).map(|b| b + 1).collect(),
            w: sw_class(&matrix.masked_rows(mask), degree),
        })
        .collect();
    let rhs: Z2Polynomial = subset_terms.iter().map(|t| t.w.clone()).sum();
    let lhs = sw_class(matrix, degree);
    let equal = lhs == rhs;
    Ok(DecompositionReport { n, k, matrix: matrix.clone(), lhs, rhs, equal, subset_terms })
}

/// One report for every `k` with `2 <= 2k <= n`.
pub fn verify_decomposition(matrix: &BottMatrix) -> Vec<DecompositionReport> {
    (1..=matrix.dim() / 2)
        .map(|k| decomposition_sum(matrix, k).expect("k >= 1"))
        .collect()
}

/// The `k` values whose reports do not hold.
pub fn failing_degrees(reports: &[DecompositionReport]) -> Vec<usize> {
    reports.iter().filter(|r| !r.holds()).map(|r| r.k).collect()
}
