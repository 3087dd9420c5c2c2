//! The divisor summatory function `D(x) = Σ_{n ≤ x} τ(n)` and the count of
//! lattice points under the hyperbola `rs = M`.
//!
//! Both quantities are the same number: a point `(r, s)` with `rs ≤ M`
//! corresponds to the divisor `r` of `c = rs ≤ M`. The two functions below
//! compute it along different routes so they can be checked against each
//! other. Points on the curve are counted, points on either axis are not.
//!
//! The classical estimate `D(x) = x ln x + (2γ − 1)x + O(x^κ)` with some
//! `1/4 ≤ κ < 1/2` is never needed here because `D` is evaluated exactly.

use crate::arith::{isqrt, to_natural, Natural};
use crate::error::Result;

/// `D(x)` by the folded hyperbola identity
/// `D(x) = 2·Σ_{k ≤ √x} ⌊x/k⌋ − ⌊√x⌋²`.
pub fn divisor_summatory(x: Natural) -> Result<Natural> {
    if x == 0 {
        return Ok(0);
    }
    let root = isqrt(x);
    let mut half: u128 = 0;
    for k in 1..=root {
        half += (x / k) as u128;
    }
    to_natural(2 * half - (root as u128) * (root as u128), "D(x)")
}

/// `|{(r, s) : r, s ≥ 1, rs ≤ m}|` by the unfolded floor sum `Σ_{r ≤ m} ⌊m/r⌋`,
/// batching each maximal run of `r` that shares the same quotient.
pub fn lattice_count(m: Natural) -> Result<Natural> {
    let mut total: u128 = 0;
    let mut r = 1;
    while r <= m {
        let q = m / r;
        let last = m / q;
        total += (q as u128) * ((last - r + 1) as u128);
        r = last + 1;
    }
    to_natural(total, "lattice count")
}
