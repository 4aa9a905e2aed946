use super::*;
use std::f64::consts::PI;

fn spec(family: VortexFamily, r0: f64, gamma: f64, g: f64) -> VortexSpec {
    VortexSpec::new(family, r0, 1.0, gamma, g, [0.0, 0.0], [0.0, 0.0]).unwrap()
}

fn all_families() -> Vec<VortexFamily> {
    let mut fams = vec![VortexFamily::Gaussian];
    for p in 1..=5 {
        fams.push(VortexFamily::CosPower { p });
    }
    for p in 2..=5 {
        fams.push(VortexFamily::ExpBump { p });
        fams.push(VortexFamily::ArctanBump { p });
    }
    fams
}

// independent oracle: composite Simpson on a fine grid
fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut sum = f(a) + f(b);
    for i in 1..panels {
        sum += f(a + i as f64 * h) * if i % 2 == 0 { 2.0 } else { 4.0 };
    }
    sum * h / 3.0
}

#[test]
fn omega_point_values() {
    let s = spec(VortexFamily::CosPower { p: 1 }, 1.0, 1.0, 1.0);
    assert_eq!(s.omega(0.0), 2.0);
    for p in 1..=5 {
        let s = spec(VortexFamily::CosPower { p }, 0.7, 0.3, 1.0);
        assert_eq!(s.omega(0.7), 0.0);
        assert_eq!(s.omega(1.3), 0.0);
    }
    let s = spec(VortexFamily::Gaussian, 0.2, 1.0, 1.0);
    assert_eq!(s.omega(0.0), 1.0);
}

#[test]
fn depth_point_values() {
    for p in 1..=5 {
        let s = spec(VortexFamily::CosPower { p }, 0.45, 0.2, 2.0);
        assert_eq!(s.depth(0.45), 1.0);
        assert_eq!(s.depth(2.0), 1.0);
    }
    let s = spec(VortexFamily::Gaussian, 0.3, 0.4, 1.7);
    let expect = 1.0 - 0.4 * 0.4 * 0.3 * 0.3 / (4.0 * 1.7);
    assert!((s.depth(0.0) - expect).abs() < 1e-15);
    for p in 2..=4 {
        let s = spec(VortexFamily::ExpBump { p }, 0.5, 0.05, 1.0);
        let expect = 1.0 - 0.05 * 0.05 * (-1f64).exp();
        assert!((s.depth(0.0) - expect).abs() < 1e-15);
    }
}

#[test]
fn u_theta_is_r_times_omega() {
    for fam in all_families() {
        let s = spec(fam, 0.6, 0.1, 1.0);
        for i in 0..200 {
            let r = 1.5 * i as f64 / 199.0;
            assert_eq!(s.u_theta(r), r * s.omega(r));
        }
    }
}

#[test]
fn compact_support_is_bit_exact() {
    for fam in all_families() {
        if !fam.is_compact() {
            continue;
        }
        let s = spec(fam, 0.45, 0.2, 1.0);
        for i in 0..50 {
            let r = 0.45 + 1.0 * i as f64 / 49.0;
            assert_eq!(s.depth(r), 1.0);
            assert_eq!(s.omega(r), 0.0);
        }
    }
}

#[test]
fn ode_residual_all_families() {
    // g h'(r) = r ω(r)², with h' from central differences on depth
    for fam in all_families() {
        let s = VortexSpec::calibrated(fam, 0.45, 1.0, 0.99, 1.0, [0.0; 2], [0.0; 2]).unwrap();
        let rmax = if fam.is_compact() { 0.45 } else { 4.0 * 0.45 };
        let fd = 1e-6;
        for i in 1..1000 {
            let r = rmax * i as f64 / 1000.0;
            let hp = (s.depth(r + fd) - s.depth(r - fd)) / (2.0 * fd);
            let w = s.omega(r);
            let resid = (s.g * hp - r * w * w).abs();
            assert!(
                resid <= 1e-8 * hp.abs().max(1.0),
                "{fam:?} r={r}: residual {resid}"
            );
        }
    }
}

#[test]
fn calibration_round_trip() {
    for fam in all_families() {
        for (r0, h_min, g) in [(0.45, 0.99, 1.0), (0.2, 0.9, 2.0), (1.0, 0.5, 9.81)] {
            let gamma = calibrate_gamma(fam, r0, 1.0, h_min, g).unwrap();
            let s = VortexSpec::new(fam, r0, 1.0, gamma, g, [0.0; 2], [0.0; 2]).unwrap();
            let err = (s.depth(0.0) - h_min).abs();
            assert!(err < 1e-12, "{fam:?} r0={r0}: depth(0) off by {err}");
        }
    }
}

#[test]
fn calibration_rejects_bad_targets() {
    assert!(calibrate_gamma(VortexFamily::Gaussian, 1.0, 1.0, 1.0, 1.0).is_err());
    assert!(calibrate_gamma(VortexFamily::Gaussian, 1.0, 1.0, 0.0, 1.0).is_err());
    assert!(calibrate_gamma(VortexFamily::Gaussian, 1.0, 1.0, -0.5, 1.0).is_err());
    assert!(calibrate_gamma(VortexFamily::Gaussian, 1.0, 1.0, 1.5, 1.0).is_err());
}

#[test]
fn h_p_matches_quadrature() {
    for p in 1..=5u32 {
        for (a, b) in [(0.0, PI / 2.0), (0.2, 0.9), (0.5, 1.5)] {
            let oracle = simpson(&|y: f64| y * y.cos().powi(4 * p as i32), a, b, 2000);
            let diff = h_p(p, b) - h_p(p, a);
            assert!((diff - oracle).abs() < 1e-12, "p={p} [{a},{b}]");
        }
    }
}

#[test]
fn dry_center_rejected() {
    // amplitude large enough to drive the center depth negative
    let err = VortexSpec::new(
        VortexFamily::Gaussian,
        1.0,
        1.0,
        10.0,
        1.0,
        [0.0; 2],
        [0.0; 2],
    );
    assert!(matches!(err, Err(SpecError::DryCenter(_))));
}

#[test]
fn eval_geometry() {
    let s = VortexSpec::new(
        VortexFamily::CosPower { p: 1 },
        0.25,
        1.0,
        0.5,
        1.0,
        [0.5, 0.5],
        [1.0, 2.0],
    )
    .unwrap();
    // at the advected center the velocity is u_inf and the depth is depth(0)
    let t = 0.3;
    let (h, ux, uy) = s.eval(0.5 + t, 0.5 + 2.0 * t, t);
    assert!((h - s.depth(0.0)).abs() < 1e-15);
    // the advected offset only cancels to roundoff
    assert!((ux - 1.0).abs() < 1e-14 && (uy - 2.0).abs() < 1e-14);
    // outside the support: far field
    let (h, ux, uy) = s.eval(0.5 + t + 0.3, 0.5 + 2.0 * t, t);
    assert_eq!((h, ux, uy), (1.0, 1.0, 2.0));

    // ζ = (0, r): u_x = -u_θ(r), u_y = 0 for u_inf = 0
    let s = spec(VortexFamily::CosPower { p: 2 }, 1.0, 0.4, 1.0);
    let r = 0.37;
    let (_, ux, uy) = s.eval(0.0, r, 0.0);
    assert!((ux + s.u_theta(r)).abs() < 1e-15);
    assert_eq!(uy, 0.0);
}

#[test]
fn rotation_equivariance() {
    let s = spec(VortexFamily::ArctanBump { p: 3 }, 0.8, 0.07, 1.0);
    let (x, y) = (0.31, -0.12);
    let (h0, ux0, uy0) = s.eval(x, y, 0.0);
    for k in 1..8 {
        let th = 2.0 * PI * k as f64 / 8.0;
        let (c, sn) = th.sin_cos();
        let (xr, yr) = (c * x - sn * y, sn * x + c * y);
        let (h1, ux1, uy1) = s.eval(xr, yr, 0.0);
        assert!((h1 - h0).abs() < 1e-14);
        assert!((ux1 - (c * ux0 - sn * uy0)).abs() < 1e-14);
        assert!((uy1 - (sn * ux0 + c * uy0)).abs() < 1e-14);
    }
}

#[test]
fn translation_property() {
    let s = VortexSpec::new(
        VortexFamily::Gaussian,
        0.3,
        1.0,
        0.2,
        1.0,
        [0.2, 0.7],
        [1.3, -0.4],
    )
    .unwrap();
    let mut frozen = s;
    frozen.u_inf = [0.0, 0.0];
    let (x, y, t) = (0.9, 0.1, 0.63);
    let (h, ux, uy) = s.eval(x, y, t);
    let (hf, uxf, uyf) = frozen.eval(x - 1.3 * t, y + 0.4 * t, 0.0);
    assert!((h - hf).abs() < 1e-15);
    assert!((ux - (uxf + 1.3)).abs() < 1e-14);
    assert!((uy - (uyf - 0.4)).abs() < 1e-14);
}

#[test]
fn cell_average_outside_support() {
    let s = spec(VortexFamily::CosPower { p: 1 }, 0.25, 0.5, 1.0);
    let avg = s.cell_average([0.6, 0.7, 0.6, 0.7], 0.0, 4);
    assert_eq!(avg, [1.0, 0.0, 0.0]);
}

#[test]
fn cell_average_constant_state() {
    let s = VortexSpec::new(
        VortexFamily::CosPower { p: 1 },
        0.25,
        2.0,
        0.0,
        1.0,
        [0.5, 0.5],
        [0.7, -0.3],
    )
    .unwrap();
    let avg = s.cell_average([0.4, 0.5, 0.4, 0.5], 0.0, 4);
    assert!((avg[0] - 2.0).abs() < 1e-14);
    assert!((avg[1] - 2.0 * 0.7).abs() < 1e-14);
    assert!((avg[2] + 2.0 * 0.3).abs() < 1e-14);
}

#[test]
fn cell_average_matches_high_order_quadrature() {
    let s = VortexSpec::calibrated(
        VortexFamily::CosPower { p: 1 },
        0.25,
        1.0,
        0.99,
        1.0,
        [0.5, 0.5],
        [0.0; 2],
    )
    .unwrap();
    let cell = [0.45, 0.5, 0.55, 0.6];
    let a4 = s.cell_average(cell, 0.0, 4);
    let a16 = s.cell_average(cell, 0.0, 16);
    for c in 0..3 {
        assert!((a4[c] - a16[c]).abs() < 1e-10, "component {c}");
    }
}

#[test]
fn depth_first_derivative_is_ode_rhs() {
    for fam in all_families() {
        let s = spec(fam, 0.45, 0.1, 1.3);
        let prof = RadialProfile::new(s);
        let r = 0.3;
        let w = s.omega(r);
        assert_eq!(prof.derivative(ProfileVar::Depth, 1, r), r * w * w / 1.3);
    }
}

#[test]
fn cos_p1_depth_derivatives_vanish_at_r0() {
    let s = VortexSpec::calibrated(
        VortexFamily::CosPower { p: 1 },
        1.0,
        1.0,
        0.99,
        1.0,
        [0.0; 2],
        [0.0; 2],
    )
    .unwrap();
    let prof = RadialProfile::new(s);
    // the fifth derivative jumps at r0, so the stencil error grows with k
    for (k, tol) in [(1, 1e-15), (2, 1e-6), (3, 1e-3), (4, 5e-2)] {
        let d = prof.derivative(ProfileVar::Depth, k, 1.0);
        assert!(d.abs() < tol, "k={k}: {d}");
    }
}

#[test]
fn cos_p1_u_theta_second_derivative_jumps_at_r0() {
    // with Γ=1, r0=π: u_θ = r(1 + cos r), u_θ'' -> π from inside, 0 outside
    // (h0 large enough to keep the center wet at this amplitude)
    let s =
        VortexSpec::new(VortexFamily::CosPower { p: 1 }, PI, 100.0, 1.0, 1.0, [0.0; 2], [0.0; 2])
            .unwrap();
    let prof = RadialProfile::new(s);
    let inner = prof.derivative(ProfileVar::UTheta, 2, PI - 0.05);
    let outer = prof.derivative(ProfileVar::UTheta, 2, PI + 0.05);
    assert!((inner - PI).abs() < 0.2, "inner limit {inner}");
    assert!(outer.abs() < 1e-6, "outer limit {outer}");
}

#[test]
fn finite_difference_derivatives_track_analytic_gaussian() {
    // for the Gaussian, d²h/dr² has a closed form; check the FD evaluator
    let s = spec(VortexFamily::Gaussian, 0.5, 0.3, 1.0);
    let prof = RadialProfile::new(s);
    let c = 0.3 * 0.3 * 0.5 * 0.5 / 4.0;
    for i in 1..20 {
        let r = i as f64 * 0.05;
        let s2 = (r / 0.5) * (r / 0.5);
        let e = (-2.0 * s2).exp();
        // h'' = -c e^{-2(r/r0)²} (16 r²/r0⁴ - 4/r0²)
        let exact = -c * e * (16.0 * r * r / 0.0625 - 4.0 / 0.25);
        let fd = prof.derivative(ProfileVar::Depth, 2, r);
        assert!((fd - exact).abs() < 1e-6, "r={r}: {fd} vs {exact}");
    }
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn h_p_recursion_matches_quadrature_on_random_intervals(
            p in 1u32..=5,
            a in 0.0f64..1.5,
            len in 0.01f64..0.5,
        ) {
            let b = (a + len).min(PI / 2.0);
            prop_assume!(b > a);
            let oracle = simpson(&|y: f64| y * y.cos().powi(4 * p as i32), a, b, 2000);
            let diff = h_p(p, b) - h_p(p, a);
            prop_assert!((diff - oracle).abs() < 1e-12, "p={p} [{a},{b}]: {diff} vs {oracle}");
        }

        #[test]
        fn calibration_round_trip_for_random_parameters(
            fam_idx in 0usize..14,
            r0 in 0.05f64..2.0,
            drop_frac in 0.001f64..0.9,
            g in 0.5f64..10.0,
        ) {
            let fam = all_families()[fam_idx];
            let h_min = 1.0 - drop_frac;
            let gamma = calibrate_gamma(fam, r0, 1.0, h_min, g).unwrap();
            let s = VortexSpec::new(fam, r0, 1.0, gamma, g, [0.0; 2], [0.0; 2]).unwrap();
            let rel = ((s.depth(0.0) - h_min) / h_min).abs();
            prop_assert!(rel < 1e-12, "{fam:?}: depth(0)={} want {h_min}", s.depth(0.0));
        }

        #[test]
        fn velocity_is_radius_times_angular_velocity(
            fam_idx in 0usize..14,
            r in 0.0f64..2.0,
        ) {
            let fam = all_families()[fam_idx];
            let s = spec(fam, 0.7, 0.3, 1.0);
            prop_assert_eq!(s.u_theta(r), r * s.omega(r));
        }

        #[test]
        fn advected_field_is_a_translated_steady_field(
            x in -1.0f64..2.0,
            y in -1.0f64..2.0,
            t in 0.0f64..3.0,
            ux in -1.5f64..1.5,
            uy in -1.5f64..1.5,
        ) {
            let steady = VortexSpec::calibrated(
                VortexFamily::CosPower { p: 2 }, 0.45, 1.0, 0.99, 1.0, [0.5, 0.5], [0.0, 0.0],
            ).unwrap();
            let moving = VortexSpec::calibrated(
                VortexFamily::CosPower { p: 2 }, 0.45, 1.0, 0.99, 1.0, [0.5, 0.5], [ux, uy],
            ).unwrap();
            let (h_m, u_m, v_m) = moving.eval(x, y, t);
            let (h_s, u_s, v_s) = steady.eval(x - ux * t, y - uy * t, 0.0);
            prop_assert!((h_m - h_s).abs() < 1e-13);
            prop_assert!((u_m - (u_s + ux)).abs() < 1e-13);
            prop_assert!((v_m - (v_s + uy)).abs() < 1e-13);
        }
    }
}
