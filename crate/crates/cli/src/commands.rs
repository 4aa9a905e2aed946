//! The three subcommands: radial profiles, mesh-refinement studies, and
//! gridded field export.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use swevortex::{run_study, Grid, ProfileVar, RadialProfile, ReportRow};

use crate::config::{ConfigError, RawConfig};
use crate::csv;

/// Failure modes mapped to process exit codes by `main`.
#[derive(Debug)]
pub enum CliError {
    /// exit code 2
    Config(String),
    /// exit code 3
    Solver(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "configuration error: {msg}"),
            CliError::Solver(msg) => write!(f, "solver error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e.0)
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Config(format!("out: cannot write {}: {e}", path.display()))
}

fn emit(
    out: Option<&PathBuf>,
    meta: &[(String, String)],
    columns: &[&str],
    rows: &[Vec<f64>],
    full_precision: bool,
) -> Result<(), CliError> {
    match out {
        Some(path) => csv::write_csv_file(path, meta, columns, rows, full_precision)
            .map_err(|e| io_err(path, e)),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            csv::write_csv(&mut lock, meta, columns, rows, full_precision)
                .map_err(|e| CliError::Config(format!("cannot write to stdout: {e}")))
        }
    }
}

/// `profile`: sample h, u_theta and their first five radial derivatives on a
/// uniform grid in r, with a summary of extreme derivative magnitudes and
/// the values at r = 1 in the header.
pub fn cmd_profile(raw: &RawConfig, out: Option<&PathBuf>) -> Result<(), CliError> {
    let resolved = raw.resolve()?;
    let profile = RadialProfile::new(resolved.spec);

    let mut columns = vec!["r".to_string(), "h".to_string(), "u_theta".to_string()];
    for k in 1..=5 {
        columns.push(format!("dh{k}"));
    }
    for k in 1..=5 {
        columns.push(format!("du{k}"));
    }

    let npts = resolved.points;
    let mut rows = Vec::with_capacity(npts);
    let mut max_abs = vec![0.0f64; columns.len()];
    for i in 0..npts {
        let r = resolved.rmax * i as f64 / (npts - 1) as f64;
        let mut row = vec![r, profile.depth(r), profile.u_theta(r)];
        for k in 1..=5 {
            row.push(profile.derivative(ProfileVar::Depth, k, r));
        }
        for k in 1..=5 {
            row.push(profile.derivative(ProfileVar::UTheta, k, r));
        }
        for (m, &v) in max_abs.iter_mut().zip(&row) {
            *m = m.max(v.abs());
        }
        rows.push(row);
    }

    let mut meta = raw.echo(&resolved);
    for (name, &m) in columns.iter().zip(&max_abs).skip(1) {
        meta.push((format!("max|{name}|"), format!("{m:e}")));
    }
    meta.push(("h(1)".to_string(), format!("{:e}", profile.depth(1.0))));
    meta.push(("u_theta(1)".to_string(), format!("{:e}", profile.u_theta(1.0))));

    let colrefs: Vec<&str> = columns.iter().map(String::as_str).collect();
    emit(out, &meta, &colrefs, &rows, resolved.full_precision)
}

fn order_cell(order: Option<f64>) -> f64 {
    order.unwrap_or(0.0)
}

/// Render one study row in the layout used for the reference tables:
/// errors with 4 significant digits, orders with 3 decimals.
fn table_line(row: &ReportRow) -> String {
    let mut line = format!("{:>5}", row.n);
    for c in 0..3 {
        line.push_str(&format!(
            "   {:>9}  {:>6.3}",
            format!("{:.3e}", row.err[c]),
            order_cell(row.order[c])
        ));
    }
    if let Some(failure) = &row.failure {
        line.push_str(&format!("   FAILED: {failure}"));
    }
    line
}

/// `converge`: run the mesh-refinement study and emit errors and observed
/// orders per variable, as CSV plus an aligned plain-text table.
pub fn cmd_converge(raw: &RawConfig, out: Option<&PathBuf>) -> Result<(), CliError> {
    let resolved = raw.resolve()?;
    let report = run_study(&resolved.spec, &resolved.meshes, &resolved.study)
        .map_err(|e| CliError::Config(e.to_string()))?;

    let mut meta = raw.echo(&resolved);
    meta.push(("norm".to_string(), report.norm.to_string()));
    for row in &report.rows {
        if let Some(failure) = &row.failure {
            meta.push((format!("failed N{}", row.n), failure.clone()));
        }
    }

    let columns = [
        "N", "err_h", "ord_h", "err_u", "ord_u", "err_v", "ord_v",
    ];
    let rows: Vec<Vec<f64>> = report
        .rows
        .iter()
        .map(|row| {
            vec![
                row.n as f64,
                row.err[0],
                order_cell(row.order[0]),
                row.err[1],
                order_cell(row.order[1]),
                row.err[2],
                order_cell(row.order[2]),
            ]
        })
        .collect();
    emit(out, &meta, &columns, &rows, resolved.full_precision)?;

    // aligned table on stderr when the CSV goes to stdout, else on stdout
    let mut table = String::new();
    table.push_str(&format!(
        "{:>5}   {:>9}  {:>6}   {:>9}  {:>6}   {:>9}  {:>6}\n",
        "N", "Error h", "Order h", "Error u", "Order u", "Error v", "Order v"
    ));
    for row in &report.rows {
        table.push_str(&table_line(row));
        table.push('\n');
    }
    if out.is_some() {
        print!("{table}");
    } else {
        let _ = write!(std::io::stderr(), "{table}");
    }

    if report.rows.iter().any(|row| row.failure.is_some()) {
        return Err(CliError::Solver(
            "one or more mesh runs hit a solver instability (see output rows)".to_string(),
        ));
    }
    Ok(())
}

/// `fields`: write the exact field (shallow water conserved variables, or
/// Euler conserved variables with --euler) on an N×N grid at the requested
/// time — cell centers by default, cell averages with --averages.
pub fn cmd_fields(raw: &RawConfig, out: Option<&PathBuf>) -> Result<(), CliError> {
    let resolved = raw.resolve()?;
    let grid = Grid::new(resolved.n, resolved.n, resolved.study.domain)
        .map_err(|e| CliError::Config(format!("N/domain: {e}")))?;
    let t = resolved.time;
    let q = resolved.study.quad_order;

    let mut meta = raw.echo(&resolved);
    meta.push(("N".to_string(), resolved.n.to_string()));
    meta.push(("time".to_string(), format!("{t:e}")));
    meta.push((
        "sampling".to_string(),
        if resolved.averages { "cell-average" } else { "cell-center" }.to_string(),
    ));

    let columns: Vec<&str> = if resolved.euler.is_some() {
        vec!["x", "y", "rho", "rho_u", "rho_v", "rho_E"]
    } else {
        vec!["x", "y", "h", "hu", "hv"]
    };

    let mut rows = Vec::with_capacity(resolved.n * resolved.n);
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let rect = grid.cell_rect(i, j);
            // rect layout is [x_lo, x_hi, y_lo, y_hi]
            let (x, y) = (0.5 * (rect[0] + rect[1]), 0.5 * (rect[2] + rect[3]));
            let mut row = vec![x, y];
            match &resolved.euler {
                Some(field) => {
                    let u = if resolved.averages {
                        field.cell_average(rect, t, q)
                    } else {
                        field.eval(x, y, t)
                    };
                    row.extend_from_slice(&u);
                }
                None => {
                    let u = if resolved.averages {
                        resolved.spec.cell_average(rect, t, q)
                    } else {
                        let (h, ux, uy) = resolved.spec.eval(x, y, t);
                        [h, h * ux, h * uy]
                    };
                    row.extend_from_slice(&u);
                }
            }
            rows.push(row);
        }
    }
    emit(out, &meta, &columns, &rows, resolved.full_precision)
}
