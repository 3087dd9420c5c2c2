//! Resource caps shared by the sieve and the brute-force oracle.

use std::env;

/// Environment variable overriding [`Limits::sieve_cap`].
pub const SIEVE_CAP_ENV: &str = "GCDSUM_SIEVE_CAP";

/// Default number of entries a divisor sieve may allocate (~1.2 GB at 12 bytes/entry).
pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

/// Default largest N accepted by the brute-force oracle.
pub const DEFAULT_BRUTE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub sieve_cap: u64,
    pub brute_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            sieve_cap: DEFAULT_SIEVE_CAP,
            brute_cap: DEFAULT_BRUTE_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the sieve cap taken from `GCDSUM_SIEVE_CAP` when it is
    /// set to a positive integer. Unparseable values are ignored.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = env::var(SIEVE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&v| v > 0)
        {
            limits.sieve_cap = cap;
        }
        limits
    }
}
