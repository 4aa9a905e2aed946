//! Exact vortex solutions of the 2D shallow water equations and their
//! Euler-equation analogues, together with a fifth-order finite-volume
//! solver (WENO5 reconstruction, Rusanov flux, RK(6,5) time stepping)
//! for order-of-accuracy studies on periodic Cartesian grids.

pub mod convergence;
pub mod euler;
pub mod quadrature;
pub mod solver;
pub mod vortex;

pub use convergence::{observed_order, run_study, ConvergenceReport, ReportRow, StudyConfig};
pub use euler::{EulerKind, EulerVortexField};
pub use solver::{
    compute_dt, init_state, rhs, simulate, ButcherTableau, FieldState, Grid, SolverError,
};
pub use vortex::{
    calibrate_gamma, ProfileVar, RadialProfile, SpecError, VortexFamily, VortexSpec,
};
