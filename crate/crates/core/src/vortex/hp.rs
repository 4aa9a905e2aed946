//! Antiderivatives entering the closed-form depth of the cos-power family.
//!
//! `h_base` is H with H'(x) = x (1 + cos x)^2; `h_p` is H_p with
//! H_p'(x) = x cos^{4p}(x). Only differences H_p(a) - H_p(b) are ever
//! consumed, so the additive constants are fixed by the explicit
//! closed forms for p = 1..3.

/// H(x) = 2 cos x + 2x sin x + cos(2x)/8 + x sin(2x)/4 + 3x²/4.
pub fn h_base(x: f64) -> f64 {
    2.0 * x.cos() + 2.0 * x * x.sin() + (2.0 * x).cos() / 8.0 + x * (2.0 * x).sin() / 4.0
        + 0.75 * x * x
}

/// H_1(x), antiderivative of x cos⁴(x); equals H(2x)/16 up to a constant.
fn h_1(x: f64) -> f64 {
    let c2 = (2.0 * x).cos();
    let s2 = (2.0 * x).sin();
    c2 / 8.0 + x * s2 / 4.0 + c2 * c2 / 64.0 + 3.0 * x * x / 16.0 + x * c2 * s2 / 16.0
}

/// H_p(x), antiderivative of x cos^{4p}(x), p >= 1, via the
/// integration-by-parts recursion in p.
pub fn h_p(p: u32, x: f64) -> f64 {
    assert!(p >= 1, "h_p requires p >= 1");
    let (s, c) = x.sin_cos();
    let mut val = h_1(x);
    for q in 2..=p {
        let m = 4.0 * q as f64;
        let a = (m - 1.0) * (m - 3.0) / (m * (m - 2.0));
        let t1 = x * c.powi(4 * q as i32 - 3) * s / m * ((m - 1.0) / (m - 2.0) + c * c);
        let t2 = c.powi(4 * q as i32 - 2)
            * (c * c / (m * m) + (m - 1.0) / (m * (m - 2.0) * (m - 2.0)));
        val = a * val + t1 + t2;
    }
    val
}
