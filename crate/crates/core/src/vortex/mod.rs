//! Exact vortex solution families of the shallow water equations.
//!
//! Each family is a radially symmetric steady solution of the
//! cyclostrophic balance g h'(r) = r ω(r)², optionally advected by a
//! constant background velocity. The compactly supported families are
//! identically constant for r >= r0, so a periodic box that contains
//! the support sees the exact far field.

mod hp;
mod profile;

pub use hp::{h_base, h_p};
pub use profile::{ProfileVar, RadialProfile};

use crate::quadrature::gauss_legendre;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("amplitude must be nonnegative, got {0}")]
    NegativeAmplitude(f64),
    #[error("family exponent p must be >= 1")]
    ZeroExponent,
    #[error("h_min must lie in (0, h0); got h_min={h_min}, h0={h0}")]
    BadDepthTarget { h_min: f64, h0: f64 },
    #[error("depth at vortex center is {0}, which is not positive (amplitude too large)")]
    DryCenter(f64),
    #[error("adiabatic constant must be > 1, got {0}")]
    BadGasGamma(f64),
    #[error("pressure at vortex center is {0}, which is not positive")]
    NonPositivePressure(f64),
    #[error("density at vortex center is {0}, which is not positive")]
    NonPositiveDensity(f64),
}

/// One of the exact vortex families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VortexFamily {
    /// ω = Γ (1 + cos(π r/r0))^p inside r0, zero outside; class C^{2p}.
    CosPower { p: u32 },
    /// ω = Γ exp(-(r/r0)²); smooth but not compactly supported.
    Gaussian,
    /// C^∞ compact bump, depth h0 - Γ² exp(-1/(1-ρ)^p) with ρ = (r/r0)².
    ExpBump { p: u32 },
    /// C^∞ compact bump, depth h0 - Γ² exp(-1/arctan^p(1-ρ)).
    ArctanBump { p: u32 },
}

impl VortexFamily {
    pub fn is_compact(&self) -> bool {
        !matches!(self, VortexFamily::Gaussian)
    }

    fn validate(&self) -> Result<(), SpecError> {
        match self {
            VortexFamily::CosPower { p }
            | VortexFamily::ExpBump { p }
            | VortexFamily::ArctanBump { p } => {
                if *p == 0 {
                    return Err(SpecError::ZeroExponent);
                }
            }
            VortexFamily::Gaussian => {}
        }
        Ok(())
    }
}

/// Complete description of one exact solution: family, shape, calibration
/// and background advection.
#[derive(Debug, Clone, Copy)]
pub struct VortexSpec {
    pub family: VortexFamily,
    pub r0: f64,
    pub h0: f64,
    pub gamma_amp: f64,
    pub g: f64,
    pub center: [f64; 2],
    pub u_inf: [f64; 2],
}

impl VortexSpec {
    pub fn new(
        family: VortexFamily,
        r0: f64,
        h0: f64,
        gamma_amp: f64,
        g: f64,
        center: [f64; 2],
        u_inf: [f64; 2],
    ) -> Result<Self, SpecError> {
        family.validate()?;
        for (name, value) in [("r0", r0), ("h0", h0), ("g", g)] {
            if !(value > 0.0) {
                return Err(SpecError::NonPositive { name, value });
            }
        }
        if !(gamma_amp >= 0.0) {
            return Err(SpecError::NegativeAmplitude(gamma_amp));
        }
        let spec = Self {
            family,
            r0,
            h0,
            gamma_amp,
            g,
            center,
            u_inf,
        };
        // all families have their depth minimum at the center
        let hc = spec.depth(0.0);
        if !(hc > 0.0) {
            return Err(SpecError::DryCenter(hc));
        }
        Ok(spec)
    }

    /// Build a spec whose amplitude is calibrated so that depth(0) = h_min.
    #[allow(clippy::too_many_arguments)]
    pub fn calibrated(
        family: VortexFamily,
        r0: f64,
        h0: f64,
        h_min: f64,
        g: f64,
        center: [f64; 2],
        u_inf: [f64; 2],
    ) -> Result<Self, SpecError> {
        let gamma = calibrate_gamma(family, r0, h0, h_min, g)?;
        Self::new(family, r0, h0, gamma, g, center, u_inf)
    }

    /// Angular velocity ω(r).
    pub fn omega(&self, r: f64) -> f64 {
        debug_assert!(r >= 0.0);
        let gam = self.gamma_amp;
        match self.family {
            VortexFamily::CosPower { p } => {
                if r >= self.r0 {
                    0.0
                } else {
                    gam * (1.0 + (PI * r / self.r0).cos()).powi(p as i32)
                }
            }
            VortexFamily::Gaussian => {
                let s = r / self.r0;
                gam * (-s * s).exp()
            }
            VortexFamily::ExpBump { p } => {
                let rho = (r / self.r0) * (r / self.r0);
                if rho >= 1.0 {
                    0.0
                } else {
                    let q = (1.0 - rho).powi(p as i32);
                    gam * (2.0 * p as f64 * self.g / (self.r0 * self.r0 * q * (1.0 - rho)))
                        .sqrt()
                        * (-0.5 / q).exp()
                }
            }
            VortexFamily::ArctanBump { p } => {
                let rho = (r / self.r0) * (r / self.r0);
                if rho >= 1.0 {
                    0.0
                } else {
                    let a = (1.0 - rho).atan();
                    let ap = a.powi(p as i32);
                    gam * (-0.5 / ap).exp()
                        * (2.0 * p as f64 * self.g
                            / (self.r0 * self.r0 * ap * a * (1.0 + (1.0 - rho) * (1.0 - rho))))
                        .sqrt()
                }
            }
        }
    }

    /// Tangential velocity u_θ(r) = r ω(r).
    pub fn u_theta(&self, r: f64) -> f64 {
        r * self.omega(r)
    }

    /// Water depth h(r), integrating g h' = r ω² with h(∞) = h0.
    pub fn depth(&self, r: f64) -> f64 {
        let gam = self.gamma_amp;
        match self.family {
            VortexFamily::CosPower { p } => {
                if r >= self.r0 {
                    self.h0
                } else {
                    let scale = 2f64.powi(p as i32 + 1) * gam * self.r0 / PI;
                    self.h0
                        - scale * scale / self.g
                            * (h_p(p, PI / 2.0) - h_p(p, PI * r / (2.0 * self.r0)))
                }
            }
            VortexFamily::Gaussian => {
                let s = r / self.r0;
                self.h0 - gam * gam * self.r0 * self.r0 / (4.0 * self.g) * (-2.0 * s * s).exp()
            }
            VortexFamily::ExpBump { p } => {
                let rho = (r / self.r0) * (r / self.r0);
                if rho >= 1.0 {
                    self.h0
                } else {
                    self.h0 - gam * gam * (-(1.0 - rho).powi(-(p as i32))).exp()
                }
            }
            VortexFamily::ArctanBump { p } => {
                let rho = (r / self.r0) * (r / self.r0);
                if rho >= 1.0 {
                    self.h0
                } else {
                    self.h0 - gam * gam * (-(1.0 - rho).atan().powi(-(p as i32))).exp()
                }
            }
        }
    }

    /// Depth and velocity at a Cartesian point and time: the profile is
    /// centered at `center + u_inf t` and advected with `u_inf`.
    pub fn eval(&self, x: f64, y: f64, t: f64) -> (f64, f64, f64) {
        let zx = x - self.center[0] - self.u_inf[0] * t;
        let zy = y - self.center[1] - self.u_inf[1] * t;
        let r = zx.hypot(zy);
        // u_θ(r)/r = ω(r) is finite at the origin, so work with ω directly
        let w = self.omega(r);
        let h = self.depth(r);
        (h, self.u_inf[0] - w * zy, self.u_inf[1] + w * zx)
    }

    /// Cell average of (h, hu, hv) over an axis-aligned rectangle
    /// [x0,x1]×[y0,y1] by a q×q tensor Gauss-Legendre rule.
    pub fn cell_average(&self, rect: [f64; 4], t: f64, q: usize) -> [f64; 3] {
        let [x0, x1, y0, y1] = rect;
        // compact families are exactly the far-field state on cells that
        // do not touch the support
        if self.family.is_compact() {
            let cx = self.center[0] + self.u_inf[0] * t;
            let cy = self.center[1] + self.u_inf[1] * t;
            let dx = (x0 - cx).max(cx - x1).max(0.0);
            let dy = (y0 - cy).max(cy - y1).max(0.0);
            if dx.hypot(dy) >= self.r0 {
                return [
                    self.h0,
                    self.h0 * self.u_inf[0],
                    self.h0 * self.u_inf[1],
                ];
            }
        }
        let (nodes, weights) = gauss_legendre(q);
        let xm = 0.5 * (x0 + x1);
        let xh = 0.5 * (x1 - x0);
        let ym = 0.5 * (y0 + y1);
        let yh = 0.5 * (y1 - y0);
        let mut acc = [0.0; 3];
        for (xi, wx) in nodes.iter().zip(&weights) {
            let x = xm + xh * xi;
            for (yi, wy) in nodes.iter().zip(&weights) {
                let y = ym + yh * yi;
                let (h, ux, uy) = self.eval(x, y, t);
                let w = wx * wy;
                acc[0] += w * h;
                acc[1] += w * h * ux;
                acc[2] += w * h * uy;
            }
        }
        // weights sum to 2 per direction
        [acc[0] / 4.0, acc[1] / 4.0, acc[2] / 4.0]
    }
}

/// Amplitude Γ such that depth(0) = h_min for the given family.
pub fn calibrate_gamma(
    family: VortexFamily,
    r0: f64,
    h0: f64,
    h_min: f64,
    g: f64,
) -> Result<f64, SpecError> {
    family.validate()?;
    for (name, value) in [("r0", r0), ("h0", h0), ("g", g)] {
        if !(value > 0.0) {
            return Err(SpecError::NonPositive { name, value });
        }
    }
    if !(h_min > 0.0 && h_min < h0) {
        return Err(SpecError::BadDepthTarget { h_min, h0 });
    }
    let drop = h0 - h_min;
    Ok(match family {
        VortexFamily::CosPower { p } => {
            let dh = h_p(p, PI / 2.0) - h_p(p, 0.0);
            PI / (2f64.powi(p as i32 + 1) * r0) * (g * drop / dh).sqrt()
        }
        VortexFamily::Gaussian => 2.0 / r0 * (g * drop).sqrt(),
        VortexFamily::ExpBump { .. } => (drop * 1f64.exp()).sqrt(),
        VortexFamily::ArctanBump { p } => {
            // depth(0) = h0 - Γ² exp(-(4/π)^p)
            (drop * (4.0 / PI).powi(p as i32).exp()).sqrt()
        }
    })
}

#[cfg(test)]
mod tests;
