//! Scans E(N)/sqrt(N) over a geometric grid and writes the CSV table and SVG
//! scatter plot.
//!
//! ```bash
//! cargo run --release --example error_scan -- /tmp/scan
//! ```

use std::path::PathBuf;

use gcdsum::report::{write_csv, write_svg};
use gcdsum::{error_scan, AlgorithmKind, AsymptoticConstants, Limits, ScanSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;

    let spec = ScanSpec::default();
    let records = error_scan(
        &spec,
        AlgorithmKind::IdentitySummatory,
        AsymptoticConstants::get(),
        &Limits::default(),
    )?;
    for r in &records {
        println!(
            "N = {:>10}  E/sqrt(N) = {:>9}  |E|/N^0.6 = {:.4}",
            r.n,
            r.normalized.to_sig_string(6),
            r.scaled_error(0.6)
        );
    }

    let csv = dir.join("gcdsum_scan.csv");
    let svg = dir.join("gcdsum_scan.svg");
    write_csv(&records, &csv)?;
    write_svg(&records, &svg)?;
    println!("wrote {} and {}", csv.display(), svg.display());
    Ok(())
}
