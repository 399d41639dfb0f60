//! A worked 7-dimensional example with known answers.
//!
//! The matrix has a staircase of five nonzero rows, `a_{i,i+1} = a_{i,i+2} = 1`
//! for `i = 1..5`. Its fourth Stiefel-Whitney class and those of its five
//! elementary components built from the nonzero rows are recorded below, as
//! written in the usual juxtaposed notation.

use crate::bott_matrix::BottMatrix;

pub const STAIRCASE_TEXT: &str = "\
0110000
0011000
0001100
0000110
0000011
0000000
0000000
";

/// `w_4` of the staircase manifold.
pub const STAIRCASE_W4: &str = "x2x3x4x5+x1x3x4x5+x1x2x3x5+x1x2x3x4";

/// `(rows kept, w_4 of that elementary component)`.
pub const STAIRCASE_COMPONENTS: [(&[usize], &str); 5] = [
    (&[1, 2, 3, 4], "x1x2x3x4"),
    (&[1, 2, 3, 5], "x1x2x3x5"),
    (&[1, 2, 4, 5], "0"),
    (&[1, 3, 4, 5], "x1x3x4x5"),
    (&[2, 3, 4, 5], "x2x3x4x5"),
];

pub fn staircase_matrix() -> BottMatrix {
    BottMatrix::parse_text(STAIRCASE_TEXT).expect("embedded matrix is valid")
}
