use super::*;
use crate::vortex::{VortexFamily, VortexSpec};

fn vortex(u_inf: [f64; 2]) -> VortexSpec {
    VortexSpec::calibrated(
        VortexFamily::CosPower { p: 3 },
        0.45,
        1.0,
        0.99,
        1.0,
        [0.5, 0.5],
        u_inf,
    )
    .unwrap()
}

fn constant_state(n: usize, u: [f64; 3]) -> FieldState {
    let grid = Grid::unit_square(n).unwrap();
    FieldState {
        grid,
        time: 0.0,
        cells: vec![u; n * n],
    }
}

#[test]
fn constant_state_is_a_fixed_point() {
    let state = constant_state(8, [1.3, 0.52, -0.26]);
    let du = rhs(&state, 1.0).unwrap();
    for d in du {
        assert_eq!(d, [0.0, 0.0, 0.0]);
    }
}

#[test]
fn still_water_time_step() {
    for n in [10, 20, 40] {
        let state = constant_state(n, [1.0, 0.0, 0.0]);
        let dt = compute_dt(&state, 1.0, 0.95);
        assert!((dt - 0.95 / (2.0 * n as f64)).abs() < 1e-15, "n={n}");
    }
}

#[test]
fn vortex_time_step_bound() {
    let spec = vortex([1.0, 1.0]);
    let grid = Grid::unit_square(32).unwrap();
    let state = init_state(&spec, grid, 0.0, 4);
    let dt = compute_dt(&state, spec.g, 0.95);
    assert!(dt > 0.0);
    // dimension-summed convention is stricter than the 1D bound
    let cmax = state
        .cells
        .iter()
        .map(|u| (u[1] / u[0]).abs().max((u[2] / u[0]).abs()) + (spec.g * u[0]).sqrt())
        .fold(0.0f64, f64::max);
    assert!(dt <= 0.95 * grid.dx() / cmax);
}

#[test]
fn steady_vortex_residual_self_convergence() {
    // u_inf = 0: the exact vortex is steady, so ||rhs|| = O(dx^5)
    let spec = vortex([0.0, 0.0]);
    let norm = |n: usize| {
        let state = init_state(&spec, Grid::unit_square(n).unwrap(), 0.0, 4);
        let du = rhs(&state, spec.g).unwrap();
        du.iter().map(|d| d[0].abs()).sum::<f64>() / (n * n) as f64
    };
    let e1 = norm(32);
    let e2 = norm(64);
    let slope = (e1 / e2).log2();
    // pre-asymptotic superconvergence above 5 is fine; below 5 is not
    assert!(slope > 4.2 && slope < 7.0, "slope {slope} (e32={e1}, e64={e2})");
}

// independent 1D reference: classical WENO5 face reconstruction written
// out with the textbook coefficients, plus Rusanov flux
mod reference_1d {
    pub fn weno5_right(v: &[f64; 5]) -> f64 {
        let eps = 1e-6;
        let b0 = 13.0 / 12.0 * (v[0] - 2.0 * v[1] + v[2]).powi(2)
            + 0.25 * (v[0] - 4.0 * v[1] + 3.0 * v[2]).powi(2);
        let b1 = 13.0 / 12.0 * (v[1] - 2.0 * v[2] + v[3]).powi(2) + 0.25 * (v[1] - v[3]).powi(2);
        let b2 = 13.0 / 12.0 * (v[2] - 2.0 * v[3] + v[4]).powi(2)
            + 0.25 * (3.0 * v[2] - 4.0 * v[3] + v[4]).powi(2);
        let p0 = (2.0 * v[0] - 7.0 * v[1] + 11.0 * v[2]) / 6.0;
        let p1 = (-v[1] + 5.0 * v[2] + 2.0 * v[3]) / 6.0;
        let p2 = (2.0 * v[2] + 5.0 * v[3] - v[4]) / 6.0;
        let a0 = 0.1 / (eps + b0).powi(2);
        let a1 = 0.6 / (eps + b1).powi(2);
        let a2 = 0.3 / (eps + b2).powi(2);
        (a0 * p0 + a1 * p1 + a2 * p2) / (a0 + a1 + a2)
    }

    pub fn weno5_left(v: &[f64; 5]) -> f64 {
        let m = [v[4], v[3], v[2], v[1], v[0]];
        weno5_right(&m)
    }

    /// rhs of the 1D shallow water system (h, hu, hv) with periodic cells.
    pub fn rhs(cells: &[[f64; 3]], g: f64, dx: f64) -> Vec<[f64; 3]> {
        let n = cells.len();
        let wrap = |i: isize| i.rem_euclid(n as isize) as usize;
        let mut fm = vec![[0.0; 3]; n]; // minus side of face i+1/2
        let mut fp = vec![[0.0; 3]; n];
        for i in 0..n as isize {
            for c in 0..3 {
                let v: [f64; 5] = std::array::from_fn(|m| cells[wrap(i + m as isize - 2)][c]);
                fm[wrap(i)][c] = weno5_right(&v);
                fp[wrap(i - 1)][c] = weno5_left(&v);
            }
        }
        let flux = |u: &[f64; 3]| [u[1], u[1] * u[1] / u[0] + 0.5 * g * u[0] * u[0],
            u[1] * u[2] / u[0]];
        let mut face = vec![[0.0; 3]; n];
        for i in 0..n {
            let (ul, ur) = (fm[i], fp[i]);
            let lam = ((ul[1] / ul[0]).abs() + (g * ul[0]).sqrt())
                .max((ur[1] / ur[0]).abs() + (g * ur[0]).sqrt());
            let (fl, fr) = (flux(&ul), flux(&ur));
            for c in 0..3 {
                face[i][c] = 0.5 * (fl[c] + fr[c]) - 0.5 * lam * (ur[c] - ul[c]);
            }
        }
        (0..n)
            .map(|i| {
                let l = face[wrap(i as isize - 1)];
                std::array::from_fn(|c| -(face[i][c] - l[c]) / dx)
            })
            .collect()
    }
}

#[test]
fn y_independent_data_matches_1d_reference() {
    // data varying only in x: the 2D rhs must agree with a 1D solver
    let n = 32;
    let grid = Grid::unit_square(n).unwrap();
    let g = 1.4;
    let profile: Vec<[f64; 3]> = (0..n)
        .map(|i| {
            let x = (i as f64 + 0.5) / n as f64;
            let h = 1.0 + 0.1 * (2.0 * std::f64::consts::PI * x).sin();
            [h, 0.3 * h, -0.2 * h * (2.0 * std::f64::consts::PI * x).cos()]
        })
        .collect();
    let mut cells = vec![[0.0; 3]; n * n];
    for j in 0..n {
        for i in 0..n {
            cells[grid.idx(i, j)] = profile[i];
        }
    }
    let state = FieldState {
        grid,
        time: 0.0,
        cells,
    };
    let du = rhs(&state, g).unwrap();
    let du1d = reference_1d::rhs(&profile, g, grid.dx());
    for j in 0..n {
        for i in 0..n {
            for c in 0..3 {
                let diff = (du[grid.idx(i, j)][c] - du1d[i][c]).abs();
                assert!(diff < 1e-11, "cell ({i},{j}) comp {c}: {diff}");
            }
        }
    }
}

#[test]
fn zero_amplitude_simulation_is_inert() {
    let spec = VortexSpec::new(
        VortexFamily::CosPower { p: 1 },
        0.25,
        1.0,
        0.0,
        1.0,
        [0.5, 0.5],
        [1.0, 1.0],
    )
    .unwrap();
    let out = simulate(&spec, Grid::unit_square(16).unwrap(), 0.95, 0.1, 4).unwrap();
    for u in &out.cells {
        assert!((u[0] - 1.0).abs() < 1e-13);
        assert!((u[1] - 1.0).abs() < 1e-13);
        assert!((u[2] - 1.0).abs() < 1e-13);
    }
}

#[test]
fn mass_is_conserved() {
    let spec = vortex([1.0, 1.0]);
    let grid = Grid::unit_square(32).unwrap();
    let initial = init_state(&spec, grid, 0.0, 4);
    let m0 = initial.total_mass();
    let out = simulate(&spec, grid, 0.95, 0.1, 4).unwrap();
    let drift = ((out.total_mass() - m0) / m0).abs();
    assert!(drift < 1e-12, "relative mass drift {drift}");
}

#[test]
fn quarter_rotation_symmetry_is_preserved() {
    let spec = vortex([0.0, 0.0]);
    let n = 24;
    let grid = Grid::unit_square(n).unwrap();
    let out = simulate(&spec, grid, 0.95, 0.05, 4).unwrap();
    // rotate the grid by 90° about the domain center: (i,j) -> (n-1-j, i),
    // velocities (u,v) -> (-v, u)
    for j in 0..n {
        for i in 0..n {
            let a = out.cells[grid.idx(i, j)];
            let b = out.cells[grid.idx(n - 1 - j, i)];
            assert!((a[0] - b[0]).abs() < 1e-10, "h at ({i},{j})");
            assert!((b[1] + a[2]).abs() < 1e-10, "hu at ({i},{j})");
            assert!((b[2] - a[1]).abs() < 1e-10, "hv at ({i},{j})");
        }
    }
}

#[test]
fn dry_state_aborts_with_diagnostics() {
    let mut state = constant_state(8, [1.0, 0.0, 0.0]);
    state.cells[8 * 3 + 2] = [-0.1, 0.0, 0.0];
    let err = rk_step(&state, 1e-3, &ButcherTableau::rk65(), 1.0).unwrap_err();
    match err {
        SolverError::Instability { i, j, .. } => {
            assert_eq!((i, j), (2, 3));
        }
        other => panic!("unexpected error {other:?}"),
    }
}

#[test]
fn grid_validation() {
    assert!(Grid::unit_square(4).is_err());
    assert!(Grid::new(8, 4, [0.0, 0.0, 1.0, 1.0]).is_err());
    assert!(Grid::new(8, 8, [0.0, 0.0, 0.0, 1.0]).is_err());
}
