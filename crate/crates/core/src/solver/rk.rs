//! Butcher's 6-stage, fifth-order explicit Runge-Kutta method.

/// Coefficients of an explicit Runge-Kutta scheme with 6 stages.
#[derive(Debug, Clone)]
pub struct ButcherTableau {
    pub a: [[f64; 6]; 6],
    pub b: [f64; 6],
    pub c: [f64; 6],
}

impl ButcherTableau {
    /// Butcher's RK(6,5).
    pub fn rk65() -> Self {
        let mut a = [[0.0; 6]; 6];
        a[1][0] = 1.0 / 4.0;
        a[2][0] = 1.0 / 8.0;
        a[2][1] = 1.0 / 8.0;
        a[3][2] = 1.0 / 2.0;
        a[4][0] = 3.0 / 16.0;
        a[4][1] = -3.0 / 8.0;
        a[4][2] = 3.0 / 8.0;
        a[4][3] = 9.0 / 16.0;
        a[5][0] = -3.0 / 7.0;
        a[5][1] = 8.0 / 7.0;
        a[5][2] = 6.0 / 7.0;
        a[5][3] = -12.0 / 7.0;
        a[5][4] = 8.0 / 7.0;
        Self {
            a,
            b: [
                7.0 / 90.0,
                0.0,
                16.0 / 45.0,
                2.0 / 15.0,
                16.0 / 45.0,
                7.0 / 90.0,
            ],
            c: [0.0, 0.25, 0.25, 0.5, 0.75, 1.0],
        }
    }

    /// Row sums of `a` must equal `c` and the weights must sum to 1.
    pub fn check_consistency(&self) -> bool {
        let rows = self
            .a
            .iter()
            .zip(&self.c)
            .all(|(row, c)| (row.iter().sum::<f64>() - c).abs() < 1e-15);
        rows && (self.b.iter().sum::<f64>() - 1.0).abs() < 1e-15
    }

    /// One explicit step for a generic ODE system y' = f(t, y); used by
    /// scalar fixtures and tests. The PDE solver has its own
    /// state-specialized loop.
    pub fn step_ode<F>(&self, t: f64, y: &[f64], dt: f64, f: F) -> Vec<f64>
    where
        F: Fn(f64, &[f64]) -> Vec<f64>,
    {
        let n = y.len();
        let mut k: Vec<Vec<f64>> = Vec::with_capacity(6);
        for s in 0..6 {
            let mut ys = y.to_vec();
            for (j, kj) in k.iter().enumerate() {
                let aij = self.a[s][j];
                if aij != 0.0 {
                    for i in 0..n {
                        ys[i] += dt * aij * kj[i];
                    }
                }
            }
            k.push(f(t + self.c[s] * dt, &ys));
        }
        let mut out = y.to_vec();
        for (s, ks) in k.iter().enumerate() {
            for i in 0..n {
                out[i] += dt * self.b[s] * ks[i];
            }
        }
        out
    }
}
