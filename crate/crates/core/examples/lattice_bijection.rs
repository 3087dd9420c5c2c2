//! Lattice points under the hyperbola rs = M versus the divisor summatory
//! function D(M) and a divisor sieve: three routes to the same count.

use gcdsum::{divisor_summatory, lattice_count, sieve_tau, Limits};

fn main() -> Result<(), gcdsum::Error> {
    let table = sieve_tau(10_000, &Limits::default())?;
    println!(
        "{:>8} {:>10} {:>10} {:>10}",
        "M", "lattice", "D(M)", "sieve"
    );
    for m in [1u64, 5, 10, 100, 1_000, 10_000] {
        println!(
            "{m:>8} {:>10} {:>10} {:>10}",
            lattice_count(m)?,
            divisor_summatory(m)?,
            table.prefix(m)
        );
    }

    let mismatches = (1..=10_000u64)
        .filter(|&m| lattice_count(m).ok() != Some(table.prefix(m)))
        .count();
    println!("mismatches for M <= 10^4: {mismatches}");

    let big = 1_000_000_000_000u64;
    println!(
        "D(10^12) = {} (lattice {})",
        divisor_summatory(big)?,
        lattice_count(big)?
    );
    Ok(())
}
