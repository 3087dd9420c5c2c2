//! Checks that the definition-level, lattice and summatory algorithms agree
//! for every N up to a bound, then spot-checks random larger N.

use gcdsum::{s_brute, s_identity, s_lemma1, Limits};

fn main() -> Result<(), gcdsum::Error> {
    let max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("bound must be a positive integer"))
        .unwrap_or(2_000);
    let limits = Limits::default();

    let mut agreed = 0;
    for n in 1..=max {
        let values = [s_brute(n, &limits)?, s_lemma1(n)?, s_identity(n)?];
        if values.iter().all(|&v| v == values[0]) {
            agreed += 1;
        } else {
            println!("disagreement at N = {n}: {values:?}");
        }
    }
    println!("3-way agreement: {agreed}/{max}");

    // a fixed linear-congruential walk keeps the spot checks reproducible
    let mut x: u64 = 0x2545_f491;
    for _ in 0..5 {
        x = x.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1);
        let n = 1 + (x >> 33) % 1_000_000;
        let b = s_brute(n, &limits)?;
        let i = s_identity(n)?;
        println!(
            "N = {n:>7}: brute {b}, identity {i}, {}",
            if b == i { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
