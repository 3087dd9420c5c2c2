//! CSV and SVG output for error scans.
//!
//! Both writers are deterministic: identical records produce identical bytes,
//! apart from the optional `seconds` column of the CSV.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::arith::Natural;
use crate::asymptotics::ErrorRecord;
use crate::error::{Error, Result};
use crate::gcd_sum::AlgorithmKind;

pub const CSV_HEADER: &str = "N,S,A,E,E_over_sqrtN,alg,seconds";

/// Significant digits used for `A`, `E` and `E_over_sqrtN`.
pub const CSV_DIGITS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CsvOptions {
    /// Fill the `seconds` column. When false the column is left empty so the
    /// file depends only on the computed values.
    pub timing: bool,
}

impl Default for CsvOptions {
    fn default() -> Self {
        CsvOptions { timing: true }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn render_csv(records: &[ErrorRecord], opts: CsvOptions) -> Result<String> {
    if records.is_empty() {
        return Err(Error::Report("no records to write".into()));
    }
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        let seconds = if opts.timing {
            format!("{:.6}", r.elapsed)
        } else {
            String::new()
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            r.s_exact,
            r.a_main.to_sig_string(CSV_DIGITS),
            r.error.to_sig_string(CSV_DIGITS),
            r.normalized.to_sig_string(CSV_DIGITS),
            r.algorithm.name(),
            seconds
        )
        .expect("writing to a String cannot fail");
    }
    Ok(out)
}

pub fn write_csv(records: &[ErrorRecord], path: &Path) -> Result<()> {
    write_csv_with(records, path, CsvOptions::default())
}

pub fn write_csv_with(records: &[ErrorRecord], path: &Path, opts: CsvOptions) -> Result<()> {
    let text = render_csv(records, opts)?;
    write_file(path, &text)
}

/// A parsed CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub n: Natural,
    pub s: Natural,
    pub a: f64,
    pub e: f64,
    pub e_over_sqrt_n: f64,
    pub alg: AlgorithmKind,
    pub seconds: Option<f64>,
}

/// Parses text produced by [`render_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(Error::Report("missing or unexpected CSV header".into()));
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let bad = |what: &str| Error::Report(format!("row {}: bad {what}", i + 1));
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 7 {
                return Err(bad("field count"));
            }
            let float = |j: usize, what: &str| fields[j].parse::<f64>().map_err(|_| bad(what));
            Ok(CsvRow {
                n: fields[0].parse().map_err(|_| bad("N"))?,
                s: fields[1].parse().map_err(|_| bad("S"))?,
                a: float(2, "A")?,
                e: float(3, "E")?,
                e_over_sqrt_n: float(4, "E_over_sqrtN")?,
                alg: fields[5].parse().map_err(|_| bad("alg"))?,
                seconds: match fields[6] {
                    "" => None,
                    s => Some(s.parse().map_err(|_| bad("seconds"))?),
                },
            })
        })
        .collect()
}

pub fn read_csv(path: &Path) -> Result<Vec<CsvRow>> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_csv(&text)
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const Y_TICKS: usize = 5;

struct Axis {
    min: f64,
    max: f64,
    from: f64,
    to: f64,
}

impl Axis {
    fn map(&self, v: f64) -> f64 {
        self.from + (v - self.min) / (self.max - self.min) * (self.to - self.from)
    }
}

/// Scatter of `E/√N` against `log10 N` with axes, ticks and a zero line.
pub fn render_svg(records: &[ErrorRecord]) -> Result<String> {
    if records.is_empty() {
        return Err(Error::Report("no records to plot".into()));
    }
    let points: Vec<(f64, f64)> = records
        .iter()
        .map(|r| ((r.n as f64).log10(), r.normalized.to_f64()))
        .collect();
    let (x_lo, x_hi) = min_max(points.iter().map(|p| p.0));
    if x_lo == x_hi {
        return Err(Error::Report("need at least two distinct N to plot".into()));
    }
    let (y_lo, y_hi) = min_max(points.iter().map(|p| p.1).chain([0.0]));

    let x_axis = if x_hi - x_lo >= 1.0 {
        Axis {
            min: x_lo.floor(),
            max: x_hi.ceil(),
            from: LEFT,
            to: WIDTH - RIGHT,
        }
    } else {
        Axis {
            min: x_lo,
            max: x_hi,
            from: LEFT,
            to: WIDTH - RIGHT,
        }
    };
    let pad = if y_hi > y_lo {
        0.1 * (y_hi - y_lo)
    } else {
        1.0
    };
    let y_axis = Axis {
        min: y_lo - pad,
        max: y_hi + pad,
        from: HEIGHT - BOTTOM,
        to: TOP,
    };

    let mut svg = String::new();
    let w = &mut svg;
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        w,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="22" text-anchor="middle" font-size="14">Normalized error E(N)/sqrt(N)</text>"#,
        WIDTH / 2.0
    );

    // axes
    let (x0, x1) = (x_axis.from, x_axis.to);
    let (y0, y1) = (y_axis.from, y_axis.to);
    let _ = writeln!(
        w,
        r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y0:.2}" stroke="black"/>"#
    );
    let _ = writeln!(
        w,
        r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x0:.2}" y2="{y1:.2}" stroke="black"/>"#
    );

    for v in x_ticks(&x_axis) {
        let x = x_axis.map(v);
        let _ = writeln!(
            w,
            r#"<line x1="{x:.2}" y1="{y0:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#,
            y0 + 5.0
        );
        let _ = writeln!(
            w,
            r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            y0 + 20.0,
            tick_label(v)
        );
    }
    for i in 0..Y_TICKS {
        let v = y_axis.min + (y_axis.max - y_axis.min) * i as f64 / (Y_TICKS - 1) as f64;
        let y = y_axis.map(v);
        let _ = writeln!(
            w,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{x0:.2}" y2="{y:.2}" stroke="black"/>"#,
            x0 - 5.0
        );
        let _ = writeln!(
            w,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            x0 - 8.0,
            y + 4.0,
            tick_label(v)
        );
    }
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">log10(N)</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        w,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">E/sqrt(N)</text>"#,
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    );

    let zero = y_axis.map(0.0);
    let _ = writeln!(
        w,
        r##"<line x1="{x0:.2}" y1="{zero:.2}" x2="{x1:.2}" y2="{zero:.2}" stroke="#888888" stroke-dasharray="4 4"/>"##
    );

    for &(lx, ly) in &points {
        let _ = writeln!(
            w,
            r##"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="#1f77b4"/>"##,
            x_axis.map(lx),
            y_axis.map(ly)
        );
    }
    let _ = writeln!(w, "</svg>");
    Ok(svg)
}

pub fn write_svg(records: &[ErrorRecord], path: &Path) -> Result<()> {
    let text = render_svg(records)?;
    write_file(path, &text)
}

fn min_max(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

fn x_ticks(axis: &Axis) -> Vec<f64> {
    if axis.max - axis.min >= 1.0 && axis.min.fract() == 0.0 && axis.max.fract() == 0.0 {
        (axis.min as i64..=axis.max as i64)
            .map(|v| v as f64)
            .collect()
    } else {
        vec![axis.min, (axis.min + axis.max) / 2.0, axis.max]
    }
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.2}");
    // avoid "-0.00"
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}
