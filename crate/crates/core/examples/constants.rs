//! Prints the constants of the main term and the series pieces they are
//! assembled from.

use gcdsum::constants::{log_tail, partial_theta, partial_zeta2};
use gcdsum::AsymptoticConstants;

fn main() -> Result<(), gcdsum::Error> {
    let k = AsymptoticConstants::get();
    for (name, v) in k.named() {
        println!("{name:<6} = {v:.30}  ({} trusted digits)", v.precision());
    }

    println!();
    println!(
        "{:>8} {:>34} {:>34}",
        "M", "zeta(2) - sum_{d<=M} 1/d^2", "sum_{d>M} ln d/d^2"
    );
    for m in [10u64, 100, 1_000, 10_000] {
        let zeta_gap = k.zeta2 - partial_zeta2(m)?;
        let tail = log_tail(m)?;
        println!("{m:>8} {zeta_gap:>34.25} {tail:>34.25}");
    }

    let split = partial_theta(1_000) + log_tail(1_000)?;
    println!();
    println!("theta via split at M = 1000: {split:.30}");
    Ok(())
}
