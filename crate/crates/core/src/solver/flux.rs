//! Physical and numerical fluxes for the 2D shallow water equations.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Conservative flux of (h, hu, hv) along the given axis, including the
/// ½ g h² pressure term in the momentum component.
pub fn physical_flux(u: &[f64; 3], g: f64, axis: Axis) -> [f64; 3] {
    let [h, hu, hv] = *u;
    let pressure = 0.5 * g * h * h;
    match axis {
        Axis::X => [hu, hu * hu / h + pressure, hu * hv / h],
        Axis::Y => [hv, hu * hv / h, hv * hv / h + pressure],
    }
}

/// Rusanov (local Lax-Friedrichs) flux. Both depths must be positive;
/// the caller is responsible for aborting on nonpositive reconstructions.
pub fn rusanov(ul: &[f64; 3], ur: &[f64; 3], g: f64, axis: Axis) -> [f64; 3] {
    debug_assert!(ul[0] > 0.0 && ur[0] > 0.0);
    let normal = match axis {
        Axis::X => 1,
        Axis::Y => 2,
    };
    let lam_l = (ul[normal] / ul[0]).abs() + (g * ul[0]).sqrt();
    let lam_r = (ur[normal] / ur[0]).abs() + (g * ur[0]).sqrt();
    let lam = lam_l.max(lam_r);
    let fl = physical_flux(ul, g, axis);
    let fr = physical_flux(ur, g, axis);
    std::array::from_fn(|c| 0.5 * (fl[c] + fr[c]) - 0.5 * lam * (ur[c] - ul[c]))
}
