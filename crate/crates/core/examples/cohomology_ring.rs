//! Arithmetic in the mod-2 cohomology ring of a real Bott manifold.
//!
//! ```bash
//! cargo run --example cohomology_ring
//! ```

use realbott::{basis, BottMatrix, CohomologyRing, Z2Polynomial};

fn main() {
    let a = BottMatrix::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
    print!("A =\n{a}");
    let ring = CohomologyRing::new(&a);

    for j in 1..=a.dim() {
        println!("x{j}^2 = {}", ring.reduce_square(j));
    }

    let p: Z2Polynomial = "x1 + x2".parse().unwrap();
    let q: Z2Polynomial = "x3 + x4".parse().unwrap();
    println!("({p}) * ({q}) = {}", ring.multiply(&p, &q));
    println!("({q})^2 = {}", ring.multiply(&q, &q));
    println!("x4^3 = {}", ring.reduce_exponents(&[0, 0, 0, 3]));

    for k in 0..=a.dim() {
        let b: Vec<String> = basis(a.dim(), k).iter().map(|m| m.to_string()).collect();
        println!("degree {k}: {} basis monomials [{}]", b.len(), b.join(", "));
    }
}
