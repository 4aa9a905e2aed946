//! WENO5 reconstruction from cell averages, both at cell faces and at
//! arbitrary points inside the central cell (needed for the Gauss
//! quadrature points on faces). The nonlinear weights are the classical
//! Jiang-Shu construction with ε = 1e-6 and exponent 2; point
//! reconstruction with negative optimal weights uses the
//! positive/negative splitting of Shi, Hu and Shu.

pub const WENO_EPS: f64 = 1e-6;

/// Jiang-Shu smoothness indicators of the three 3-cell stencils.
fn betas(v: &[f64; 5]) -> [f64; 3] {
    let b0 = 13.0 / 12.0 * (v[0] - 2.0 * v[1] + v[2]).powi(2)
        + 0.25 * (v[0] - 4.0 * v[1] + 3.0 * v[2]).powi(2);
    let b1 = 13.0 / 12.0 * (v[1] - 2.0 * v[2] + v[3]).powi(2) + 0.25 * (v[1] - v[3]).powi(2);
    let b2 = 13.0 / 12.0 * (v[2] - 2.0 * v[3] + v[4]).powi(2)
        + 0.25 * (3.0 * v[2] - 4.0 * v[3] + v[4]).powi(2);
    [b0, b1, b2]
}

/// Reconstruction of the central-cell value at a fixed point ξ
/// (cell-local coordinate, ξ ∈ [-1/2, 1/2]) from 5 cell averages.
#[derive(Debug, Clone)]
pub struct PointRecon {
    /// per-stencil reconstruction coefficients; stencil k uses v[k..k+3]
    coeff: [[f64; 3]; 3],
    /// optimal linear weights (may be negative away from the faces)
    d: [f64; 3],
    split: Option<Split>,
}

#[derive(Debug, Clone)]
struct Split {
    gp: [f64; 3],
    gm: [f64; 3],
    sp: f64,
    sm: f64,
}

/// Coefficients c_m(ξ) with p(ξ) = Σ c_m v_m for the polynomial whose
/// cell averages over cells centered at `offsets` match the data.
fn recon_coeffs(offsets: &[f64], xi: f64) -> Vec<f64> {
    let n = offsets.len();
    // m[j][t] = average of x^t over cell j
    let mut m = vec![vec![0.0; n]; n];
    for (j, o) in offsets.iter().enumerate() {
        for t in 0..n {
            let e = t as i32 + 1;
            m[j][t] = ((o + 0.5).powi(e) - (o - 0.5).powi(e)) / e as f64;
        }
    }
    // solve Mᵀ w = (1, ξ, ξ², ...) so that c_j = w_j
    let mut a = vec![vec![0.0; n + 1]; n];
    for t in 0..n {
        for j in 0..n {
            a[t][j] = m[j][t];
        }
        a[t][n] = xi.powi(t as i32);
    }
    gauss_solve(&mut a)
}

fn gauss_solve(a: &mut [Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, piv);
        for row in 0..n {
            if row != col {
                let f = a[row][col] / a[col][col];
                for k in col..=n {
                    let v = a[col][k];
                    a[row][k] -= f * v;
                }
            }
        }
    }
    (0..n).map(|i| a[i][n] / a[i][i]).collect()
}

impl PointRecon {
    pub fn new(xi: f64) -> Self {
        let stencil_offsets: [[f64; 3]; 3] =
            [[-2.0, -1.0, 0.0], [-1.0, 0.0, 1.0], [0.0, 1.0, 2.0]];
        let mut coeff = [[0.0; 3]; 3];
        for (k, offs) in stencil_offsets.iter().enumerate() {
            let c = recon_coeffs(offs, xi);
            coeff[k].copy_from_slice(&c);
        }
        let big = recon_coeffs(&[-2.0, -1.0, 0.0, 1.0, 2.0], xi);
        // optimal weights from the outermost cells, normalization fixes d1
        let d0 = big[0] / coeff[0][0];
        let d2 = big[4] / coeff[2][2];
        let d1 = 1.0 - d0 - d2;
        // consistency on the interior cells
        debug_assert!(
            (d0 * coeff[0][1] + d1 * coeff[1][0] - big[1]).abs() < 1e-10
                && (d0 * coeff[0][2] + d1 * coeff[1][1] + d2 * coeff[2][0] - big[2]).abs()
                    < 1e-10,
            "inconsistent optimal weights at xi={xi}"
        );
        let d = [d0, d1, d2];
        let split = if d.iter().any(|&x| x < 0.0) {
            // Shi-Hu-Shu splitting with θ = 3
            let gp: [f64; 3] = std::array::from_fn(|k| 0.5 * (d[k] + 3.0 * d[k].abs()));
            let gm: [f64; 3] = std::array::from_fn(|k| gp[k] - d[k]);
            let sp: f64 = gp.iter().sum();
            let sm: f64 = gm.iter().sum();
            Some(Split {
                gp: gp.map(|x| x / sp),
                gm: gm.map(|x| x / sm),
                sp,
                sm,
            })
        } else {
            None
        };
        Self { coeff, d, split }
    }

    pub fn eval_linear(&self, v: &[f64; 5]) -> f64 {
        let p: [f64; 3] = std::array::from_fn(|k| {
            self.coeff[k][0] * v[k] + self.coeff[k][1] * v[k + 1] + self.coeff[k][2] * v[k + 2]
        });
        self.d[0] * p[0] + self.d[1] * p[1] + self.d[2] * p[2]
    }

    pub fn eval(&self, v: &[f64; 5]) -> f64 {
        let b = betas(v);
        let p: [f64; 3] = std::array::from_fn(|k| {
            self.coeff[k][0] * v[k] + self.coeff[k][1] * v[k + 1] + self.coeff[k][2] * v[k + 2]
        });
        match &self.split {
            None => combine(&self.d, &b, &p),
            Some(s) => s.sp * combine(&s.gp, &b, &p) - s.sm * combine(&s.gm, &b, &p),
        }
    }
}

fn combine(d: &[f64; 3], b: &[f64; 3], p: &[f64; 3]) -> f64 {
    let mut alpha = [0.0; 3];
    let mut sum = 0.0;
    for k in 0..3 {
        let e = WENO_EPS + b[k];
        alpha[k] = d[k] / (e * e);
        sum += alpha[k];
    }
    (alpha[0] * p[0] + alpha[1] * p[1] + alpha[2] * p[2]) / sum
}

/// Reconstructions shared by the whole solver: both faces of the central
/// cell plus the 4-point Gauss rule along a face.
pub struct ReconTables {
    pub left: PointRecon,
    pub right: PointRecon,
    /// (normalized weight, reconstruction) per transverse Gauss point
    pub gauss: Vec<(f64, PointRecon)>,
}

impl ReconTables {
    pub fn new(quad_points: usize) -> Self {
        let (nodes, weights) = crate::quadrature::gauss_legendre(quad_points);
        let gauss = nodes
            .iter()
            .zip(&weights)
            .map(|(x, w)| (w / 2.0, PointRecon::new(x / 2.0)))
            .collect();
        Self {
            left: PointRecon::new(-0.5),
            right: PointRecon::new(0.5),
            gauss,
        }
    }
}

/// Face values of the central cell: (left face x_{i-1/2}, right face
/// x_{i+1/2}) from the 5 cell averages v_{i-2}..v_{i+2}.
pub fn weno5_reconstruct(v: &[f64; 5]) -> (f64, f64) {
    use std::sync::OnceLock;
    static FACES: OnceLock<(PointRecon, PointRecon)> = OnceLock::new();
    let (l, r) = FACES.get_or_init(|| (PointRecon::new(-0.5), PointRecon::new(0.5)));
    (l.eval(v), r.eval(v))
}
