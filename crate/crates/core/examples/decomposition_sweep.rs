//! Checks the decomposition of the even classes over every Bott matrix of a
//! given dimension.
//!
//! ```bash
//! cargo run --release --example decomposition_sweep -- 6
//! ```

use realbott::cli::run_sweep;

fn main() {
    let n: usize = std::env::args().nth(1).map(|s| s.parse().expect("n must be an integer")).unwrap_or(5);
    match run_sweep(n, None, None) {
        Ok(summary) => {
            print!("{}", summary.to_text());
            if !summary.passed() {
                std::process::exit(1);
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
