//! Mesh-refinement studies: per-variable errors and observed orders.

use crate::solver::{init_state, simulate, FieldState, Grid, SolverError};
use crate::vortex::VortexSpec;

/// Discrete L1 errors of (h, u, v) against the exact cell averages at
/// the state's time. Velocities are compared as primitives u = (hu)/h,
/// with the exact primitives derived from exact cell averages.
pub fn error_norm(state: &FieldState, spec: &VortexSpec, quad_order: usize) -> [f64; 3] {
    let exact = init_state(spec, state.grid, state.time, quad_order);
    let ncells = state.cells.len() as f64;
    let mut acc = [0.0f64; 3];
    for (num, ex) in state.cells.iter().zip(&exact.cells) {
        acc[0] += (num[0] - ex[0]).abs();
        acc[1] += (num[1] / num[0] - ex[1] / ex[0]).abs();
        acc[2] += (num[2] / num[0] - ex[2] / ex[0]).abs();
    }
    acc.map(|a| a / ncells)
}

/// log(e_coarse/e_fine) / log(N_fine/N_coarse); None when an error is
/// zero or negative (order undefined).
pub fn observed_order(e_coarse: f64, e_fine: f64, n_coarse: usize, n_fine: usize) -> Option<f64> {
    if e_coarse > 0.0 && e_fine > 0.0 && n_fine > n_coarse {
        Some((e_coarse / e_fine).ln() / (n_fine as f64 / n_coarse as f64).ln())
    } else {
        None
    }
}

#[derive(Debug, Clone)]
pub struct ReportRow {
    pub n: usize,
    /// L1 errors for (h, u, v); NaN when the run failed
    pub err: [f64; 3],
    /// orders vs the previous row; None on the first row or when undefined
    pub order: [Option<f64>; 3],
    pub failure: Option<String>,
}

#[derive(Debug, Clone)]
pub struct StudyConfig {
    pub domain: [f64; 4],
    pub cfl: f64,
    pub t_final: f64,
    pub quad_order: usize,
}

impl Default for StudyConfig {
    fn default() -> Self {
        Self {
            domain: [0.0, 0.0, 1.0, 1.0],
            cfl: 0.95,
            t_final: 1.0,
            quad_order: 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub spec: VortexSpec,
    pub config: StudyConfig,
    pub norm: &'static str,
    pub rows: Vec<ReportRow>,
}

/// Run the solver on each mesh and tabulate errors and observed orders.
pub fn run_study(
    spec: &VortexSpec,
    meshes: &[usize],
    config: &StudyConfig,
) -> Result<ConvergenceReport, SolverError> {
    assert!(
        meshes.windows(2).all(|w| w[0] < w[1]),
        "mesh list must be strictly increasing"
    );
    let mut rows: Vec<ReportRow> = Vec::with_capacity(meshes.len());
    for &n in meshes {
        let grid = Grid::new(n, n, config.domain)?;
        let row = match simulate(spec, grid, config.cfl, config.t_final, config.quad_order) {
            Ok(state) => {
                let err = error_norm(&state, spec, config.quad_order);
                let order = match rows.last() {
                    Some(prev) if prev.failure.is_none() => std::array::from_fn(|c| {
                        observed_order(prev.err[c], err[c], prev.n, n)
                    }),
                    _ => [None; 3],
                };
                ReportRow {
                    n,
                    err,
                    order,
                    failure: None,
                }
            }
            Err(e) => ReportRow {
                n,
                err: [f64::NAN; 3],
                order: [None; 3],
                failure: Some(e.to_string()),
            },
        };
        rows.push(row);
    }
    Ok(ConvergenceReport {
        spec: *spec,
        config: config.clone(),
        norm: "L1",
        rows,
    })
}
