//! CSV and plain-text rendering of result rows.

use std::io::Write;

use besselcert::scan::ScanRow;

pub const HEADER: [&str; 8] = ["subject", "nu", "x", "value", "oracle", "half_width", "ratio", "holds"];

/// A real with 17 significant digits, positional when the exponent is
/// moderate and scientific otherwise.
pub fn real(v: f64) -> String {
    if !v.is_finite() {
        return if v.is_nan() {
            "NaN".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{v:.16e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-5..16).contains(&exp) {
        format!("{v:.*}", (16 - exp) as usize)
    } else {
        sci
    }
}

fn fields(r: &ScanRow) -> [String; 8] {
    [
        r.subject.clone(),
        real(r.nu),
        real(r.x),
        real(r.value),
        real(r.oracle),
        real(r.half_width),
        real(r.ratio),
        r.holds.to_string(),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Plain,
}

pub fn write_rows<W: Write>(out: W, rows: &[ScanRow], format: Format) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(HEADER)?;
            for r in rows {
                w.write_record(fields(r))?;
            }
            w.flush()
        }
        Format::Plain => {
            let mut out = out;
            let cells: Vec<[String; 8]> = rows.iter().map(fields).collect();
            let mut width = HEADER.map(str::len);
            for c in &cells {
                for (w, s) in width.iter_mut().zip(c) {
                    *w = (*w).max(s.len());
                }
            }
            let line = |out: &mut W, c: &[&str]| -> std::io::Result<()> {
                let parts: Vec<String> = c.iter().zip(width).map(|(s, w)| format!("{s:<w$}")).collect();
                writeln!(out, "{}", parts.join("  ").trim_end())
            };
            line(&mut out, &HEADER)?;
            for c in &cells {
                let refs: Vec<&str> = c.iter().map(String::as_str).collect();
                line(&mut out, &refs)?;
            }
            out.flush()
        }
    }
}
