use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the exact and asymptotic evaluators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("argument out of range: {0}")]
    Range(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("sieve limit {limit} exceeds the configured cap of {cap} entries")]
    SieveCap { limit: u64, cap: u64 },

    #[error("brute-force evaluation of N = {n} exceeds the configured cap of {cap}")]
    BruteCap { n: u64, cap: u64 },

    #[error("invalid scan grid: {0}")]
    Scan(String),

    #[error("scan failed at N = {n}: {source}")]
    ScanPoint {
        n: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("cannot render report: {0}")]
    Report(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
