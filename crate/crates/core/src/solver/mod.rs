//! Fifth-order finite-volume solver for the 2D shallow water equations
//! on uniform Cartesian periodic grids.
//!
//! Semi-discretization: dimension-by-dimension WENO5 reconstruction to
//! 4 Gauss-Legendre points per face, Rusanov flux at each quadrature
//! point, and the flux divergence over each cell. Time stepping is
//! Butcher's RK(6,5) with a CFL-based step.

mod flux;
mod rk;
mod weno;

pub use flux::{physical_flux, rusanov, Axis};
pub use rk::ButcherTableau;
pub use weno::{weno5_reconstruct, PointRecon, ReconTables, WENO_EPS};

use crate::vortex::VortexSpec;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("grid must be at least 5x5 for the WENO5 stencil, got {nx}x{ny}")]
    GridTooSmall { nx: usize, ny: usize },
    #[error("domain rectangle is degenerate")]
    DegenerateDomain,
    #[error("nonpositive or non-finite depth at t={time}, cell ({i},{j}): solver unstable")]
    Instability { time: f64, i: usize, j: usize },
}

/// Uniform Cartesian grid, periodic in both directions.
#[derive(Debug, Clone, Copy)]
pub struct Grid {
    pub nx: usize,
    pub ny: usize,
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl Grid {
    pub fn new(nx: usize, ny: usize, domain: [f64; 4]) -> Result<Self, SolverError> {
        if nx < 5 || ny < 5 {
            return Err(SolverError::GridTooSmall { nx, ny });
        }
        let [xmin, ymin, xmax, ymax] = domain;
        if !(xmax > xmin && ymax > ymin) {
            return Err(SolverError::DegenerateDomain);
        }
        Ok(Self {
            nx,
            ny,
            xmin,
            ymin,
            xmax,
            ymax,
        })
    }

    /// n×n grid on the unit square [0,1]².
    pub fn unit_square(n: usize) -> Result<Self, SolverError> {
        Self::new(n, n, [0.0, 0.0, 1.0, 1.0])
    }

    pub fn dx(&self) -> f64 {
        (self.xmax - self.xmin) / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        (self.ymax - self.ymin) / self.ny as f64
    }

    /// Bounding rectangle [x0,x1,y0,y1] of cell (i,j).
    pub fn cell_rect(&self, i: usize, j: usize) -> [f64; 4] {
        let dx = self.dx();
        let dy = self.dy();
        [
            self.xmin + i as f64 * dx,
            self.xmin + (i + 1) as f64 * dx,
            self.ymin + j as f64 * dy,
            self.ymin + (j + 1) as f64 * dy,
        ]
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i + self.nx * j
    }
}

/// Conserved cell averages (h, hu, hv) on a grid at one time level.
#[derive(Debug, Clone)]
pub struct FieldState {
    pub grid: Grid,
    pub time: f64,
    pub cells: Vec<[f64; 3]>,
}

impl FieldState {
    /// Total water volume Σ h̄ ΔxΔy (sequential, deterministic sum).
    pub fn total_mass(&self) -> f64 {
        let cell_area = self.grid.dx() * self.grid.dy();
        self.cells.iter().map(|u| u[0]).sum::<f64>() * cell_area
    }

    fn check_positivity(&self) -> Result<(), SolverError> {
        for j in 0..self.grid.ny {
            for i in 0..self.grid.nx {
                let h = self.cells[self.grid.idx(i, j)][0];
                if !(h > 0.0) || !h.is_finite() {
                    return Err(SolverError::Instability {
                        time: self.time,
                        i,
                        j,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Shift moving a point to the periodic image nearest to `target`.
pub fn nearest_image_shift(point: [f64; 2], target: [f64; 2], lengths: [f64; 2]) -> [f64; 2] {
    [
        ((point[0] - target[0]) / lengths[0]).round() * lengths[0],
        ((point[1] - target[1]) / lengths[1]).round() * lengths[1],
    ]
}

/// Cell averages of the exact vortex fields at time t, by a q×q
/// Gauss-Legendre rule per cell. The advected vortex is mapped to its
/// nearest periodic image, so the reference stays meaningful after the
/// profile has crossed the domain boundary.
pub fn init_state(spec: &VortexSpec, grid: Grid, t: f64, q: usize) -> FieldState {
    let lengths = [grid.xmax - grid.xmin, grid.ymax - grid.ymin];
    let center_t = [
        spec.center[0] + spec.u_inf[0] * t,
        spec.center[1] + spec.u_inf[1] * t,
    ];
    let mut cells = Vec::with_capacity(grid.nx * grid.ny);
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let [x0, x1, y0, y1] = grid.cell_rect(i, j);
            let [sx, sy] =
                nearest_image_shift([0.5 * (x0 + x1), 0.5 * (y0 + y1)], center_t, lengths);
            cells.push(spec.cell_average([x0 - sx, x1 - sx, y0 - sy, y1 - sy], t, q));
        }
    }
    FieldState {
        grid,
        time: t,
        cells,
    }
}

fn tables() -> &'static ReconTables {
    static TABLES: OnceLock<ReconTables> = OnceLock::new();
    TABLES.get_or_init(|| ReconTables::new(4))
}

#[inline]
fn wrap(i: isize, n: usize) -> usize {
    i.rem_euclid(n as isize) as usize
}

/// Semi-discrete right-hand side: time derivative of every cell average.
pub fn rhs(state: &FieldState, g: f64) -> Result<Vec<[f64; 3]>, SolverError> {
    let tab = tables();
    let grid = &state.grid;
    let (nx, ny) = (grid.nx, grid.ny);
    let ncells = nx * ny;
    let mut du = vec![[0.0f64; 3]; ncells];

    // scratch: one-sided line averages on the faces of each direction
    let mut line_m = vec![[0.0f64; 3]; ncells];
    let mut line_p = vec![[0.0f64; 3]; ncells];
    let mut face_flux = vec![[0.0f64; 3]; ncells];

    for (axis, len_n, len_t, dn) in [
        (Axis::X, nx, ny, grid.dx()),
        (Axis::Y, ny, nx, grid.dy()),
    ] {
        // cell (n, t) in sweep coordinates; faces indexed by the cell on
        // their minus side
        let cell_idx = |n: usize, t: usize| match axis {
            Axis::X => n + nx * t,
            Axis::Y => t + nx * n,
        };

        // pass 1: WENO along the sweep direction to face line-averages
        for t in 0..len_t {
            for n in 0..len_n {
                let mut v = [[0.0f64; 5]; 3];
                for (m, vm) in (0..5).zip([-2isize, -1, 0, 1, 2]) {
                    let nn = wrap(n as isize + vm, len_n);
                    let u = state.cells[cell_idx(nn, t)];
                    for c in 0..3 {
                        v[c][m] = u[c];
                    }
                }
                let fm = cell_idx(n, t);
                let fp = cell_idx(wrap(n as isize - 1, len_n), t);
                for c in 0..3 {
                    line_m[fm][c] = tab.right.eval(&v[c]);
                    line_p[fp][c] = tab.left.eval(&v[c]);
                }
            }
        }

        // pass 2: WENO along the face to Gauss points, then Rusanov
        for t in 0..len_t {
            for n in 0..len_n {
                let mut vm = [[0.0f64; 5]; 3];
                let mut vp = [[0.0f64; 5]; 3];
                for (m, tm) in (0..5).zip([-2isize, -1, 0, 1, 2]) {
                    let tt = wrap(t as isize + tm, len_t);
                    let um = line_m[cell_idx(n, tt)];
                    let up = line_p[cell_idx(n, tt)];
                    for c in 0..3 {
                        vm[c][m] = um[c];
                        vp[c][m] = up[c];
                    }
                }
                let mut total = [0.0f64; 3];
                for (w, rec) in &tab.gauss {
                    let ul: [f64; 3] = std::array::from_fn(|c| rec.eval(&vm[c]));
                    let ur: [f64; 3] = std::array::from_fn(|c| rec.eval(&vp[c]));
                    if !(ul[0] > 0.0 && ur[0] > 0.0) {
                        let (i, j) = match axis {
                            Axis::X => (n, t),
                            Axis::Y => (t, n),
                        };
                        return Err(SolverError::Instability {
                            time: state.time,
                            i,
                            j,
                        });
                    }
                    let f = rusanov(&ul, &ur, g, axis);
                    for c in 0..3 {
                        total[c] += w * f[c];
                    }
                }
                face_flux[cell_idx(n, t)] = total;
            }
        }

        // flux divergence
        for t in 0..len_t {
            for n in 0..len_n {
                let right = face_flux[cell_idx(n, t)];
                let left = face_flux[cell_idx(wrap(n as isize - 1, len_n), t)];
                let target = &mut du[cell_idx(n, t)];
                for c in 0..3 {
                    target[c] -= (right[c] - left[c]) / dn;
                }
            }
        }
    }
    Ok(du)
}

/// CFL time step: dt = cfl / max over cells of ((|u|+c)/Δx + (|v|+c)/Δy).
pub fn compute_dt(state: &FieldState, g: f64, cfl: f64) -> f64 {
    // cfl above the stability limit is allowed; the run then aborts with
    // an Instability error once positivity is lost
    assert!(cfl > 0.0, "cfl must be positive");
    let dx = state.grid.dx();
    let dy = state.grid.dy();
    let mut speed_max = 0.0f64;
    for u in &state.cells {
        let c = (g * u[0]).sqrt();
        let vx = (u[1] / u[0]).abs();
        let vy = (u[2] / u[0]).abs();
        speed_max = speed_max.max((vx + c) / dx + (vy + c) / dy);
    }
    cfl / speed_max
}

/// One explicit RK step of the semi-discrete system.
pub fn rk_step(
    state: &FieldState,
    dt: f64,
    tableau: &ButcherTableau,
    g: f64,
) -> Result<FieldState, SolverError> {
    let n = state.cells.len();
    let mut k: Vec<Vec<[f64; 3]>> = Vec::with_capacity(6);
    for s in 0..6 {
        let stage = if s == 0 {
            state.clone()
        } else {
            let mut cells = state.cells.clone();
            for (j, kj) in k.iter().enumerate() {
                let aij = tableau.a[s][j];
                if aij != 0.0 {
                    for i in 0..n {
                        for c in 0..3 {
                            cells[i][c] += dt * aij * kj[i][c];
                        }
                    }
                }
            }
            FieldState {
                grid: state.grid,
                time: state.time + tableau.c[s] * dt,
                cells,
            }
        };
        stage.check_positivity()?;
        k.push(rhs(&stage, g)?);
    }
    let mut cells = state.cells.clone();
    for (s, ks) in k.iter().enumerate() {
        let bs = tableau.b[s];
        if bs != 0.0 {
            for i in 0..n {
                for c in 0..3 {
                    cells[i][c] += dt * bs * ks[i][c];
                }
            }
        }
    }
    let next = FieldState {
        grid: state.grid,
        time: state.time + dt,
        cells,
    };
    next.check_positivity()?;
    Ok(next)
}

/// Initialize from the exact vortex at t = 0 and advance to t_final.
pub fn simulate(
    spec: &VortexSpec,
    grid: Grid,
    cfl: f64,
    t_final: f64,
    quad_order: usize,
) -> Result<FieldState, SolverError> {
    let tableau = ButcherTableau::rk65();
    let mut state = init_state(spec, grid, 0.0, quad_order);
    state.check_positivity()?;
    while state.time < t_final - 1e-14 {
        let dt = compute_dt(&state, spec.g, cfl).min(t_final - state.time);
        state = rk_step(&state, dt, &tableau, spec.g)?;
    }
    Ok(state)
}

#[cfg(test)]
mod tests;
