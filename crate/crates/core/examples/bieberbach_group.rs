//! The affine generators of the Bieberbach group and its holonomy.
//!
//! ```bash
//! cargo run --example bieberbach_group
//! ```

use realbott::group_model::{check_conjugation, check_lattice, generators, holonomy_image};
use realbott::reference::staircase_matrix;
use realbott::BottMatrix;

fn describe(name: &str, a: &BottMatrix) {
    println!("== {name} ==");
    print!("{a}");
    for (i, s) in generators(a).iter().enumerate() {
        let sq = s.compose(s).unwrap();
        println!("s{} = {s}   s{}^2 = {sq}", i + 1, i + 1);
    }
    println!("squares are commuting lattice translations: {}", check_lattice(a));
    println!("conjugation acts by the linear part: {}", check_conjugation(a));
    let h = holonomy_image(a);
    println!(
        "holonomy order {} (nonzero rows {}, GF(2) rank {})",
        h.order(),
        a.holonomy_rank(),
        a.gf2_rank()
    );
    println!();
}

fn main() {
    describe("Klein bottle", &BottMatrix::new(2, &[(1, 2)]).unwrap());
    describe("staircase", &staircase_matrix());
    // Equal nonzero rows: s1 s2^-1 is a pure half-translation, so the
    // holonomy is smaller than the number of nonzero rows suggests.
    let dup = BottMatrix::new(3, &[(1, 3), (2, 3)]).unwrap();
    describe("repeated row", &dup);
    let s = generators(&dup);
    println!("s1 s2^-1 = {}", s[0].compose(&s[1].inverse()).unwrap());
}
