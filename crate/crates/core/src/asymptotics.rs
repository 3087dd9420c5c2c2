//! The main term `A(N) = c1·N·ln N + c0·N`, the remainder
//! `E(N) = S(N) − A(N)` and scans of `E(N)/√N` over a grid of `N`.
//!
//! `ln` is always the natural logarithm.

use std::time::Instant;

use rayon::prelude::*;

use crate::arith::Natural;
use crate::constants::{AsymptoticConstants, HighPrecisionReal};
use crate::error::{Error, Result};
use crate::gcd_sum::{s_exact, AlgorithmKind};
use crate::limits::Limits;

/// The two pieces of the main term and their sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MainTerm {
    /// `c1·N·ln N`
    pub log_part: HighPrecisionReal,
    /// `c0·N`
    pub linear_part: HighPrecisionReal,
    pub total: HighPrecisionReal,
}

pub fn main_term_parts(n: Natural, k: &AsymptoticConstants) -> Result<MainTerm> {
    if n == 0 {
        return Err(Error::Range("main term requires N >= 1".into()));
    }
    let n_hp = HighPrecisionReal::from_natural(n);
    let log_part = k.c1 * n_hp * n_hp.ln();
    let linear_part = k.c0 * n_hp;
    Ok(MainTerm {
        log_part,
        linear_part,
        total: log_part + linear_part,
    })
}

/// `A(N) = c1·N·ln N + c0·N`.
pub fn main_term(n: Natural, k: &AsymptoticConstants) -> Result<HighPrecisionReal> {
    main_term_parts(n, k).map(|m| m.total)
}

/// One evidence row: the exact sum, the main term and the normalized remainder.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRecord {
    pub n: Natural,
    pub s_exact: Natural,
    pub a_main: HighPrecisionReal,
    /// `s_exact − a_main`
    pub error: HighPrecisionReal,
    /// `error / √N`
    pub normalized: HighPrecisionReal,
    pub algorithm: AlgorithmKind,
    /// Wall-clock seconds spent computing `s_exact`.
    pub elapsed: f64,
}

impl ErrorRecord {
    /// `|E(N)| / N^exponent`, in ordinary floating point.
    pub fn scaled_error(&self, exponent: f64) -> f64 {
        self.error.to_f64().abs() / (self.n as f64).powf(exponent)
    }
}

pub fn error_at(
    n: Natural,
    alg: AlgorithmKind,
    k: &AsymptoticConstants,
    limits: &Limits,
) -> Result<ErrorRecord> {
    let start = Instant::now();
    let s = s_exact(n, alg, limits)?;
    let elapsed = start.elapsed().as_secs_f64();

    let a_main = main_term(n, k)?;
    let error = HighPrecisionReal::from_natural(s) - a_main;
    let normalized = error / HighPrecisionReal::from_natural(n).sqrt();
    Ok(ErrorRecord {
        n,
        s_exact: s,
        a_main,
        error,
        normalized,
        algorithm: alg,
        elapsed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Spacing {
    #[default]
    Geometric,
    Linear,
}

/// Grid of `points` values of `N` between `n_min` and `n_max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanSpec {
    pub n_min: Natural,
    pub n_max: Natural,
    pub points: usize,
    pub spacing: Spacing,
}

impl Default for ScanSpec {
    fn default() -> Self {
        ScanSpec {
            n_min: 1_000,
            n_max: 1_000_000_000,
            points: 13,
            spacing: Spacing::Geometric,
        }
    }
}

impl ScanSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_min == 0 {
            return Err(Error::Scan("range must start at N >= 1".into()));
        }
        if self.n_min >= self.n_max {
            return Err(Error::Scan(format!(
                "degenerate range {}..{}",
                self.n_min, self.n_max
            )));
        }
        if self.points < 2 {
            return Err(Error::Scan("need at least 2 points".into()));
        }
        Ok(())
    }

    /// Strictly increasing grid, endpoints included exactly. Interior points
    /// are rounded to the nearest integer and duplicates dropped, so fewer
    /// than `points` values come back when the range is too narrow.
    pub fn grid(&self) -> Result<Vec<Natural>> {
        self.validate()?;
        let last = self.points - 1;
        let (lo, hi) = (self.n_min as f64, self.n_max as f64);
        let mut grid: Vec<Natural> = (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.n_min;
                }
                if i == last {
                    return self.n_max;
                }
                let t = i as f64 / last as f64;
                let x = match self.spacing {
                    Spacing::Geometric => lo * (hi / lo).powf(t),
                    Spacing::Linear => lo + (hi - lo) * t,
                };
                (x.round() as Natural).clamp(self.n_min, self.n_max)
            })
            .collect();
        grid.dedup();
        Ok(grid)
    }
}

/// Evaluates [`error_at`] on every grid point, in parallel, returning rows in
/// increasing `N`.
pub fn error_scan(
    spec: &ScanSpec,
    alg: AlgorithmKind,
    k: &AsymptoticConstants,
    limits: &Limits,
) -> Result<Vec<ErrorRecord>> {
    let grid = spec.grid()?;
    grid.par_iter()
        .map(|&n| {
            error_at(n, alg, k, limits).map_err(|e| Error::ScanPoint {
                n,
                source: Box::new(e),
            })
        })
        .collect()
}
