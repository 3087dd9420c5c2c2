//! Command-line front end.
//!
//! ```text
//! gcdsum exact <N> [--alg brute|lemma1|identity]
//! gcdsum predict <N>
//! gcdsum constants [--digits D]
//! gcdsum scan --from <N> --to <N> --points <K> [--linear] --out <csv> [--svg <path>] [--alg ...]
//! gcdsum verify --max <N>
//! ```

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::arith::Natural;
use crate::asymptotics::{error_scan, main_term_parts, ScanSpec, Spacing};
use crate::constants::AsymptoticConstants;
use crate::error::{Error, Result};
use crate::gcd_sum::{s_brute, s_exact, s_identity, s_lemma1, AlgorithmKind};
use crate::hp::MAX_DIGITS;
use crate::limits::Limits;
use crate::report::{write_csv_with, write_svg, CsvOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gcdsum",
    version,
    about = "Exact and asymptotic evaluation of S(N) = sum over ab <= N of tau(gcd(a, b))"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

/// Parsed command line.
#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum CliCommand {
    /// Compute S(N) exactly
    Exact {
        n: Natural,
        #[arg(long, default_value = "identity", value_parser = parse_alg)]
        alg: AlgorithmKind,
    },
    /// Evaluate the main term A(N) = zeta(2) N ln N + c0 N
    Predict { n: Natural },
    /// Print zeta(2), gamma, theta, c1 and c0
    Constants {
        #[arg(long, default_value_t = 25)]
        digits: usize,
    },
    /// Tabulate E(N)/sqrt(N) over a grid of N
    Scan {
        #[arg(long = "from", default_value_t = 1_000)]
        from: Natural,
        #[arg(long = "to", default_value_t = 1_000_000_000)]
        to: Natural,
        #[arg(long, default_value_t = 13)]
        points: usize,
        /// Linear instead of geometric spacing
        #[arg(long)]
        linear: bool,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value = "identity", value_parser = parse_alg)]
        alg: AlgorithmKind,
        /// Leave the seconds column empty
        #[arg(long)]
        no_timing: bool,
    },
    /// Check that all three algorithms agree for every N up to --max
    Verify {
        #[arg(long)]
        max: Natural,
    },
}

fn parse_alg(s: &str) -> std::result::Result<AlgorithmKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `argv` (including the program name) into a command.
pub fn parse(argv: &[String]) -> std::result::Result<CliCommand, clap::Error> {
    Cli::try_parse_from(argv).map(|c| c.command)
}

/// Runs the command line, writing results to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let command = match parse(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let rendered = e.render().to_string();
            let line = rendered.lines().next().unwrap_or("usage error").trim();
            let _ = writeln!(err, "gcdsum: {}", line.trim_start_matches("error: "));
            return EXIT_USAGE;
        }
    };
    let limits = Limits::from_env();
    match execute(&command, &limits, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILURE,
        Err(e) => {
            let _ = writeln!(err, "gcdsum: {e}");
            EXIT_FAILURE
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

/// Executes a parsed command. `Ok(false)` signals a failed verification.
pub fn execute(command: &CliCommand, limits: &Limits, out: &mut dyn Write) -> Result<bool> {
    match command {
        CliCommand::Exact { n, alg } => {
            let start = Instant::now();
            let s = s_exact(*n, *alg, limits)?;
            let secs = start.elapsed().as_secs_f64();
            writeln!(out, "S({n}) = {s}").map_err(io_err)?;
            writeln!(out, "algorithm: {alg}, elapsed: {secs:.6} s").map_err(io_err)?;
        }
        CliCommand::Predict { n } => {
            let k = AsymptoticConstants::get();
            let m = main_term_parts(*n, k)?;
            writeln!(out, "A({n}) = {}", m.total.to_sig_string(25)).map_err(io_err)?;
            writeln!(out, "  zeta(2) N ln N = {}", m.log_part.to_sig_string(25)).map_err(io_err)?;
            writeln!(
                out,
                "  c0 N           = {}",
                m.linear_part.to_sig_string(25)
            )
            .map_err(io_err)?;
        }
        CliCommand::Constants { digits } => {
            if !(1..=MAX_DIGITS).contains(digits) {
                return Err(Error::Range(format!(
                    "--digits must be between 1 and {MAX_DIGITS}"
                )));
            }
            let k = AsymptoticConstants::get();
            for (name, v) in k.named() {
                writeln!(
                    out,
                    "{name:<6} = {}  (precision {} digits)",
                    v.to_sig_string(*digits),
                    v.precision()
                )
                .map_err(io_err)?;
            }
        }
        CliCommand::Scan {
            from,
            to,
            points,
            linear,
            out: csv_path,
            svg,
            alg,
            no_timing,
        } => {
            let spec = ScanSpec {
                n_min: *from,
                n_max: *to,
                points: *points,
                spacing: if *linear {
                    Spacing::Linear
                } else {
                    Spacing::Geometric
                },
            };
            let records = error_scan(&spec, *alg, AsymptoticConstants::get(), limits)?;
            write_csv_with(&records, csv_path, CsvOptions { timing: !no_timing })?;
            if let Some(svg_path) = svg {
                write_svg(&records, svg_path)?;
            }
            let worst = records
                .iter()
                .map(|r| r.normalized.to_f64().abs())
                .fold(0.0, f64::max);
            writeln!(
                out,
                "{} points written to {}; max |E(N)|/sqrt(N) = {worst:.6}",
                records.len(),
                csv_path.display()
            )
            .map_err(io_err)?;
        }
        CliCommand::Verify { max } => {
            if *max == 0 {
                return Err(Error::Range("--max must be at least 1".into()));
            }
            if *max > limits.brute_cap {
                return Err(Error::BruteCap {
                    n: *max,
                    cap: limits.brute_cap,
                });
            }
            let mismatches: Vec<(Natural, [Natural; 3])> = (1..=*max)
                .into_par_iter()
                .map(|n| -> Result<Option<(Natural, [Natural; 3])>> {
                    let values = [s_brute(n, limits)?, s_lemma1(n)?, s_identity(n)?];
                    Ok((values[0] != values[1] || values[1] != values[2]).then_some((n, values)))
                })
                .filter_map(|r| r.transpose())
                .collect::<Result<_>>()?;
            let agreed = *max - mismatches.len() as Natural;
            writeln!(out, "3-way agreement: {agreed}/{max}").map_err(io_err)?;
            for (n, [b, l, i]) in mismatches.iter().take(10) {
                writeln!(out, "  N = {n}: brute {b}, lemma1 {l}, identity {i}").map_err(io_err)?;
            }
            return Ok(mismatches.is_empty());
        }
    }
    Ok(true)
}
