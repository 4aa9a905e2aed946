//! Steady Euler-equation vortexes built from a shallow water vortex spec.
//!
//! Both constructions satisfy the steady reduction r p'(r) = ρ u_θ(r)².
//! The radial integral ∫_r^∞ s ω(s)² ds they need equals
//! g (h0 - h(r)) by the shallow water balance, so the closed-form depth
//! supplies it exactly for every family, anchored at the true far field.

use crate::vortex::{SpecError, VortexSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerKind {
    /// constant entropy, p = ρ^γ
    Isentropic,
    /// constant density, pressure from the radial balance
    Isochoric,
}

/// Exact steady (optionally advected) Euler vortex reference field.
#[derive(Debug, Clone, Copy)]
pub struct EulerVortexField {
    pub kind: EulerKind,
    pub gamma_gas: f64,
    pub rho0: f64,
    pub p0: f64,
    pub spec: VortexSpec,
}

impl EulerVortexField {
    pub fn new(
        kind: EulerKind,
        gamma_gas: f64,
        rho0: f64,
        p0: f64,
        spec: VortexSpec,
    ) -> Result<Self, SpecError> {
        if !(gamma_gas > 1.0) {
            return Err(SpecError::BadGasGamma(gamma_gas));
        }
        if !(rho0 > 0.0) {
            return Err(SpecError::NonPositive {
                name: "rho0",
                value: rho0,
            });
        }
        let field = Self {
            kind,
            gamma_gas,
            rho0,
            p0,
            spec,
        };
        // both profiles are monotone in r, so r = 0 is the worst point
        let rho_c = field.density(0.0);
        if !(rho_c > 0.0) {
            return Err(SpecError::NonPositiveDensity(rho_c));
        }
        let p_c = field.pressure(0.0);
        if !(p_c > 0.0) {
            return Err(SpecError::NonPositivePressure(p_c));
        }
        Ok(field)
    }

    /// ∫_r^∞ s ω(s)² ds, via the depth closed form.
    fn tail_integral(&self, r: f64) -> f64 {
        self.spec.g * (self.spec.h0 - self.spec.depth(r))
    }

    pub fn density(&self, r: f64) -> f64 {
        match self.kind {
            EulerKind::Isentropic => {
                let g = self.gamma_gas;
                let base = self.rho0 - (g - 1.0) / g * self.tail_integral(r);
                base.powf(1.0 / (g - 1.0))
            }
            EulerKind::Isochoric => self.rho0,
        }
    }

    pub fn pressure(&self, r: f64) -> f64 {
        match self.kind {
            EulerKind::Isentropic => self.density(r).powf(self.gamma_gas),
            EulerKind::Isochoric => self.p0 - self.rho0 * self.tail_integral(r),
        }
    }

    /// Conserved variables (ρ, ρu_x, ρu_y, ρE) at a Cartesian point.
    pub fn eval(&self, x: f64, y: f64, t: f64) -> [f64; 4] {
        let s = &self.spec;
        let zx = x - s.center[0] - s.u_inf[0] * t;
        let zy = y - s.center[1] - s.u_inf[1] * t;
        let r = zx.hypot(zy);
        let w = s.omega(r);
        let ux = s.u_inf[0] - w * zy;
        let uy = s.u_inf[1] + w * zx;
        let rho = self.density(r);
        let p = self.pressure(r);
        let energy = p / (self.gamma_gas - 1.0) + 0.5 * rho * (ux * ux + uy * uy);
        [rho, rho * ux, rho * uy, energy]
    }

    /// Cell average of the conserved variables by a q×q tensor
    /// Gauss-Legendre rule.
    pub fn cell_average(&self, rect: [f64; 4], t: f64, q: usize) -> [f64; 4] {
        let [x0, x1, y0, y1] = rect;
        let (nodes, weights) = crate::quadrature::gauss_legendre(q);
        let (xm, xh) = (0.5 * (x0 + x1), 0.5 * (x1 - x0));
        let (ym, yh) = (0.5 * (y0 + y1), 0.5 * (y1 - y0));
        let mut acc = [0.0; 4];
        for (xi, wx) in nodes.iter().zip(&weights) {
            for (yi, wy) in nodes.iter().zip(&weights) {
                let u = self.eval(xm + xh * xi, ym + yh * yi, t);
                for c in 0..4 {
                    acc[c] += wx * wy * u[c];
                }
            }
        }
        acc.map(|v| v / 4.0)
    }
}
