//! Reproduces the 7-dimensional staircase example: `w_4` of the manifold and
//! of its five elementary components built from the nonzero rows.
//!
//! ```bash
//! cargo run --example staircase
//! ```

use realbott::reference::staircase_matrix;
use realbott::stiefel_whitney::{decomposition_sum, sw_class};

fn main() {
    let a = staircase_matrix();
    print!("A =\n{a}");
    println!("w4(M(A)) = {}", sw_class(&a, 4));

    let report = decomposition_sum(&a, 2).expect("2k = 4 <= 7");
    println!();
    println!("{report}");
}
