//! Exact and asymptotic evaluation of
//!
//! ```text
//! S(N) = Σ_{ab ≤ N} τ(gcd(a, b))
//! ```
//!
//! over ordered pairs of positive integers, where `τ` counts divisors.
//!
//! * [`gcd_sum`] computes `S(N)` exactly by three independent routes.
//! * [`summatory`] provides the divisor summatory function and the hyperbola
//!   lattice-point count they are built on.
//! * [`constants`] evaluates `ζ(2)`, `γ` and `θ = Σ ln d / d²` to about 30
//!   digits.
//! * [`asymptotics`] evaluates the main term
//!   `A(N) = ζ(2)·N·ln N + ((2γ − 1)ζ(2) − 2θ)·N` and the remainder
//!   `E(N) = S(N) − A(N)`, which stays within a constant multiple of `√N`.
//! * [`report`] writes scans as CSV and SVG; [`cli`] is the command line.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory:
//!
//! ```bash
//! cargo run --release --example exact_sum
//! cargo run --release --example lattice_bijection
//! cargo run --release --example constants
//! cargo run --release --example main_term
//! cargo run --release --example error_scan
//! cargo run --release --example verify
//! ```

pub mod arith;
pub mod asymptotics;
pub mod cli;
pub mod constants;
pub mod error;
pub mod gcd_sum;
pub mod hp;
pub mod limits;
pub mod report;
pub mod summatory;

pub use arith::{isqrt, sieve_tau, tau, DivisorTable, Natural};
pub use asymptotics::{error_at, error_scan, main_term, ErrorRecord, ScanSpec, Spacing};
pub use constants::{AsymptoticConstants, HighPrecisionReal};
pub use error::{Error, Result};
pub use gcd_sum::{s_brute, s_exact, s_identity, s_lemma1, AlgorithmKind};
pub use limits::Limits;
pub use summatory::{divisor_summatory, lattice_count};
