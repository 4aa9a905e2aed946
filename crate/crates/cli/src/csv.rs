//! Minimal CSV emission and parsing with a `#`-prefixed metadata header.
//!
//! Every file this tool writes can be read back by [`read_csv`]; with full
//! precision enabled the round trip is bit-identical, because values are
//! encoded with Rust's shortest round-trip float formatting.

use std::io::{self, Write};
use std::path::Path;

/// One parsed CSV file: metadata pairs, column names, numeric rows.
#[derive(Debug, PartialEq)]
pub struct CsvData {
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// Format one value for emission. Full precision uses the shortest decimal
/// that parses back to the same bits; otherwise 4 significant digits.
pub fn fmt_value(v: f64, full_precision: bool) -> String {
    if full_precision {
        format!("{v:e}")
    } else {
        format!("{v:.3e}")
    }
}

pub fn write_csv(
    out: &mut dyn Write,
    meta: &[(String, String)],
    columns: &[&str],
    rows: &[Vec<f64>],
    full_precision: bool,
) -> io::Result<()> {
    for (key, value) in meta {
        writeln!(out, "# {key} = {value}")?;
    }
    writeln!(out, "{}", columns.join(","))?;
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&v| fmt_value(v, full_precision)).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn write_csv_file(
    path: &Path,
    meta: &[(String, String)],
    columns: &[&str],
    rows: &[Vec<f64>],
    full_precision: bool,
) -> io::Result<()> {
    let file = std::fs::File::create(path)?;
    let mut buf = io::BufWriter::new(file);
    write_csv(&mut buf, meta, columns, rows, full_precision)?;
    buf.flush()
}

/// Parse a file previously written by [`write_csv`].
pub fn read_csv(text: &str) -> Result<CsvData, String> {
    let mut meta = Vec::new();
    let mut columns = Vec::new();
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once('=') {
                meta.push((key.trim().to_string(), value.trim().to_string()));
            }
            continue;
        }
        if columns.is_empty() {
            columns = line.split(',').map(|s| s.trim().to_string()).collect();
            continue;
        }
        let row: Result<Vec<f64>, _> = line
            .split(',')
            .map(|cell| {
                cell.trim()
                    .parse::<f64>()
                    .map_err(|_| format!("line {}: bad number `{cell}`", lineno + 1))
            })
            .collect();
        let row = row?;
        if row.len() != columns.len() {
            return Err(format!(
                "line {}: expected {} columns, found {}",
                lineno + 1,
                columns.len(),
                row.len()
            ));
        }
        rows.push(row);
    }
    if columns.is_empty() {
        return Err("no header row found".to_string());
    }
    Ok(CsvData {
        meta,
        columns,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_precision_round_trip_is_bit_identical() {
        let rows = vec![
            vec![0.1 + 0.2, 1.0 / 3.0, f64::MIN_POSITIVE],
            vec![-1.2345678901234567e-101, 9.87654321e300, 0.0],
        ];
        let mut buf = Vec::new();
        write_csv(
            &mut buf,
            &[("k".into(), "v".into())],
            &["a", "b", "c"],
            &rows,
            true,
        )
        .unwrap();
        let parsed = read_csv(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(parsed.meta, vec![("k".to_string(), "v".to_string())]);
        for (orig, back) in rows.iter().zip(&parsed.rows) {
            for (&x, &y) in orig.iter().zip(back) {
                assert_eq!(x.to_bits(), y.to_bits());
            }
        }
    }

    #[test]
    fn default_precision_keeps_four_significant_digits() {
        assert_eq!(fmt_value(4.18849e-6, false), "4.188e-6");
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(read_csv("").is_err());
        assert!(read_csv("a,b\n1.0\n").is_err());
        assert!(read_csv("a,b\n1.0,xyz\n").is_err());
    }
}
