//! Computes S(N) with each exact algorithm and times them.
//!
//! ```bash
//! cargo run --release --example exact_sum -- 1000000
//! ```

use std::time::Instant;

use gcdsum::{s_exact, AlgorithmKind, Limits};

fn main() -> Result<(), gcdsum::Error> {
    let n: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("N must be a positive integer"))
        .unwrap_or(1_000_000);
    let limits = Limits::from_env();

    for alg in AlgorithmKind::ALL {
        if alg == AlgorithmKind::Brute && n > limits.brute_cap {
            println!(
                "{alg:>8}: skipped (N above brute-force cap {})",
                limits.brute_cap
            );
            continue;
        }
        let start = Instant::now();
        let s = s_exact(n, alg, &limits)?;
        println!(
            "{alg:>8}: S({n}) = {s}  [{:.3} s]",
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
