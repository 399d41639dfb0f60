//! Reading, writing and enumerating Bott matrices.
//!
//! ```bash
//! cargo run --example matrix_formats
//! ```

use realbott::bott_matrix::enumerate;
use realbott::BottMatrix;

fn main() {
    let a: BottMatrix = "011\n001\n000\n".parse().unwrap();
    println!("text:\n{}", a.to_text());
    println!("json: {}", a.to_json());
    let b: BottMatrix = a.to_json().parse().unwrap();
    assert_eq!(a, b);

    match "010\n001\n100\n".parse::<BottMatrix>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }

    for n in 1..=6 {
        let all = enumerate(n).unwrap();
        let total = all.len();
        let orientable = all.filter(BottMatrix::is_orientable).count();
        println!("n = {n}: {total} matrices, {orientable} orientable");
    }
}
