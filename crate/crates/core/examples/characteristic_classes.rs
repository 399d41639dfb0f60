//! Total Stiefel-Whitney classes for a handful of small Bott matrices,
//! compared with the orientability criterion.
//!
//! ```bash
//! cargo run --example characteristic_classes
//! ```

use realbott::stiefel_whitney::{line_class, total_sw, w1_from_rows};
use realbott::BottMatrix;

fn main() {
    let cases = [
        ("3-torus", BottMatrix::zero(3).unwrap()),
        ("Klein bottle", BottMatrix::new(2, &[(1, 2)]).unwrap()),
        ("orientable, n = 3", BottMatrix::new(3, &[(1, 2), (1, 3)]).unwrap()),
        ("n = 4 chain", BottMatrix::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap()),
    ];
    for (name, a) in cases {
        println!("== {name} ==");
        print!("{a}");
        let ys: Vec<String> =
            (1..=a.dim()).map(|i| format!("y{i} = {}", line_class(&a, i).unwrap())).collect();
        println!("{}", ys.join(", "));
        println!("{}", total_sw(&a));
        println!(
            "orientable: {} (w1 from row sums: {})",
            a.is_orientable(),
            w1_from_rows(&a)
        );
        println!();
    }
}
