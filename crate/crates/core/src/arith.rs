//! Exact integer primitives: integer square root, divisor counting and the
//! divisor sieve.

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A nonnegative integer argument. Magnitudes are bounded by [`NATURAL_MAX`].
pub type Natural = u64;

/// Largest value any exact result may take (2^63 - 1).
pub const NATURAL_MAX: Natural = i64::MAX as u64;

/// Narrows a 128-bit intermediate back into the `Natural` range.
pub(crate) fn to_natural(value: u128, what: &'static str) -> Result<Natural> {
    if value > NATURAL_MAX as u128 {
        Err(Error::Overflow(what))
    } else {
        Ok(value as Natural)
    }
}

/// `⌊√n⌋`, computed by integer Newton iteration.
///
/// The iteration starts above the root and decreases monotonically, so the
/// first non-decreasing step lands on the floor. A final correction guards
/// the invariant `r² ≤ n < (r+1)²` with 128-bit products.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    // 2^ceil(bits/2) >= sqrt(n)
    let bits = 64 - n.leading_zeros();
    let mut r: u64 = 1 << bits.div_ceil(2);
    loop {
        let next = (r + n / r) / 2;
        if next >= r {
            break;
        }
        r = next;
    }
    while (r as u128) * (r as u128) > n as u128 {
        r -= 1;
    }
    while ((r + 1) as u128) * ((r + 1) as u128) <= n as u128 {
        r += 1;
    }
    r
}

/// Number of positive divisors of `n`, by trial division up to `⌊√n⌋`.
pub fn tau(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Range("tau is undefined at 0".into()));
    }
    let root = isqrt(n);
    let mut count = 0;
    for d in 1..=root {
        if n.is_multiple_of(d) {
            count += 2;
        }
    }
    if root * root == n {
        count -= 1;
    }
    Ok(count)
}

/// Greatest common divisor by the binary (Stein) algorithm.
pub fn binary_gcd(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

/// Sieve-built table of `τ(n)` for `1 ≤ n ≤ limit` together with its prefix sums.
///
/// Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTable {
    limit: u64,
    // index 0 is unused padding so that tau[n] is τ(n)
    tau: Vec<u32>,
    prefix: Vec<u64>,
}

impl DivisorTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `τ(n)`; panics if `n` is 0 or above the limit.
    #[inline]
    pub fn tau(&self, n: u64) -> u64 {
        assert!(n >= 1 && n <= self.limit, "{n} outside 1..={}", self.limit);
        self.tau[n as usize] as u64
    }

    /// `Σ_{n ≤ x} τ(n)`; `prefix(0)` is 0.
    #[inline]
    pub fn prefix(&self, x: u64) -> u64 {
        assert!(x <= self.limit, "{x} above limit {}", self.limit);
        self.prefix[x as usize]
    }

    /// `τ(1), …, τ(limit)`.
    pub fn tau_values(&self) -> &[u32] {
        &self.tau[1..]
    }

    /// `prefix(1), …, prefix(limit)`.
    pub fn prefix_values(&self) -> &[u64] {
        &self.prefix[1..]
    }
}

/// Builds a [`DivisorTable`] with the divisor-marking sieve: every `d ≤ limit`
/// increments each of its multiples.
pub fn sieve_tau(limit: u64, limits: &Limits) -> Result<DivisorTable> {
    if limit == 0 {
        return Err(Error::Range("sieve limit must be at least 1".into()));
    }
    if limit > limits.sieve_cap {
        return Err(Error::SieveCap {
            limit,
            cap: limits.sieve_cap,
        });
    }
    let len = limit as usize + 1;
    let mut tau = vec![0u32; len];
    for d in 1..len {
        for m in (d..len).step_by(d) {
            tau[m] += 1;
        }
    }
    let mut prefix = vec![0u64; len];
    for n in 1..len {
        prefix[n] = prefix[n - 1] + tau[n] as u64;
    }
    Ok(DivisorTable { limit, tau, prefix })
}
