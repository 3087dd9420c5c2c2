//! Exact evaluation of `S(N) = Σ_{ab ≤ N} τ(gcd(a, b))` over ordered pairs of
//! positive integers.
//!
//! Three independent routes are provided:
//!
//! * [`s_brute`] walks every pair straight from the definition.
//! * [`s_lemma1`] rewrites `τ(gcd(a, b))` as the number of common divisors
//!   `d ≤ √N` and, for each `d`, counts the pairs `(rd, sd)` with `rs ≤ N/d²`
//!   as lattice points under a hyperbola.
//! * [`s_identity`] replaces each lattice count by the divisor summatory
//!   function: `S(N) = Σ_{d ≤ √N} D(⌊N/d²⌋)`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::arith::{binary_gcd, isqrt, sieve_tau, to_natural, Natural};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::summatory::{divisor_summatory, lattice_count};

/// Which exact algorithm evaluates `S(N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AlgorithmKind {
    /// Direct pair enumeration. `O(N log N)`; capped by [`Limits::brute_cap`].
    Brute,
    /// Common-divisor expansion with per-divisor lattice counts.
    Lemma1Lattice,
    /// Sum of divisor summatory values. `O(√N log N)`.
    #[default]
    IdentitySummatory,
}

impl AlgorithmKind {
    pub const ALL: [AlgorithmKind; 3] = [
        AlgorithmKind::Brute,
        AlgorithmKind::Lemma1Lattice,
        AlgorithmKind::IdentitySummatory,
    ];

    /// Short name used on the command line and in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            AlgorithmKind::Brute => "brute",
            AlgorithmKind::Lemma1Lattice => "lemma1",
            AlgorithmKind::IdentitySummatory => "identity",
        }
    }
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgorithmKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::Range(format!(
                    "unknown algorithm '{s}' (expected brute, lemma1 or identity)"
                ))
            })
    }
}

fn require_positive(n: Natural) -> Result<()> {
    if n == 0 {
        Err(Error::Range("S(N) requires N >= 1".into()))
    } else {
        Ok(())
    }
}

/// `S(N)` by enumerating every pair `(a, b)` with `ab ≤ N`.
///
/// `gcd(a, b)² ≤ ab ≤ N`, so `τ` is looked up in a sieve of size `⌊√N⌋`.
/// The outer loop over `a` runs in parallel.
pub fn s_brute(n: Natural, limits: &Limits) -> Result<Natural> {
    require_positive(n)?;
    if n > limits.brute_cap {
        return Err(Error::BruteCap {
            n,
            cap: limits.brute_cap,
        });
    }
    let table = sieve_tau(isqrt(n), limits)?;
    let total: u128 = (1..=n)
        .into_par_iter()
        .map(|a| {
            let mut row = 0u64;
            for b in 1..=n / a {
                row += table.tau(binary_gcd(a, b));
            }
            row as u128
        })
        .sum();
    to_natural(total, "S(N)")
}

/// `S(N) = Σ_{d ≤ √N} #{(r, s) : rs ≤ ⌊N/d²⌋}`.
pub fn s_lemma1(n: Natural) -> Result<Natural> {
    sum_over_common_divisors(n, lattice_count)
}

/// `S(N) = Σ_{d ≤ √N} D(⌊N/d²⌋)`.
pub fn s_identity(n: Natural) -> Result<Natural> {
    sum_over_common_divisors(n, divisor_summatory)
}

fn sum_over_common_divisors(n: Natural, inner: fn(Natural) -> Result<Natural>) -> Result<Natural> {
    require_positive(n)?;
    let mut total: u128 = 0;
    for d in 1..=isqrt(n) {
        let square = (d as u128) * (d as u128);
        let bound = (n as u128 / square) as Natural;
        total += inner(bound)? as u128;
    }
    to_natural(total, "S(N)")
}

/// Dispatches to the chosen algorithm.
pub fn s_exact(n: Natural, alg: AlgorithmKind, limits: &Limits) -> Result<Natural> {
    match alg {
        AlgorithmKind::Brute => s_brute(n, limits),
        AlgorithmKind::Lemma1Lattice => s_lemma1(n),
        AlgorithmKind::IdentitySummatory => s_identity(n),
    }
}
