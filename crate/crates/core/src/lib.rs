//! Stiefel-Whitney classes of real Bott manifolds.
//!
//! A real Bott manifold `M(A)` is determined by its Bott matrix `A`, an
//! `n x n` strictly upper-triangular matrix over GF(2). This crate computes,
//! exactly:
//!
//! * the mod-2 cohomology ring `H*(M(A); Z/2)` in square-free normal form
//!   ([`cohomology`]),
//! * the Stiefel-Whitney classes `w_k(M(A))` and the decomposition of the
//!   even classes over elementary components ([`stiefel_whitney`]),
//! * the affine generators of the Bieberbach group `Γ(A)` and its holonomy
//!   ([`group_model`]).
//!
//! ```
//! use realbott::{BottMatrix, stiefel_whitney::total_sw};
//!
//! let klein = BottMatrix::new(2, &[(1, 2)]).unwrap();
//! let w = total_sw(&klein);
//! assert_eq!(w.get(1).to_string(), "x1");
//! assert!(w.get(2).is_zero());
//! ```

pub mod bott_matrix;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod group_model;
pub mod reference;
pub mod stiefel_whitney;

pub use bott_matrix::{enumerate, enumerate_with_cap, BottMatrix};
pub use cohomology::{basis, CohomologyRing, Monomial, Z2Polynomial};
pub use error::{BottError, ParseError, ParseErrorKind};
pub use group_model::{AffineMap, Dyadic, HolonomyGroup};
pub use stiefel_whitney::{DecompositionReport, SubsetTerm, TotalSwClass};
