//! Compares the exact S(N) with the main term A(N) = zeta(2) N ln N + c0 N
//! at powers of ten up to 10^12.

use gcdsum::asymptotics::main_term_parts;
use gcdsum::{error_at, AlgorithmKind, AsymptoticConstants, Limits};

fn main() -> Result<(), gcdsum::Error> {
    let k = AsymptoticConstants::get();
    let limits = Limits::default();
    println!(
        "{:>14} {:>16} {:>24} {:>20} {:>10}",
        "N", "S(N)", "A(N)", "E(N)", "E/sqrt(N)"
    );
    for e in 1..=12 {
        let n = 10u64.pow(e);
        let r = error_at(n, AlgorithmKind::IdentitySummatory, k, &limits)?;
        println!(
            "{n:>14} {:>16} {:>24} {:>20} {:>10}",
            r.s_exact,
            r.a_main.to_sig_string(22),
            r.error.to_sig_string(12),
            r.normalized.to_sig_string(6)
        );
    }

    let parts = main_term_parts(1_000_000, k)?;
    println!();
    println!("A(10^6) = {:.25}", parts.total);
    println!("  zeta(2) N ln N = {:.25}", parts.log_part);
    println!("  c0 N           = {:.25}", parts.linear_part);
    Ok(())
}
