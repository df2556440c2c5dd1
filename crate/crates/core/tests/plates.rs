use std::f64::consts::PI;

use fresnelkit::plates::*;
use fresnelkit::quad::{finite_diff, integrate_adaptive, phase_split, StencilSpec};
use fresnelkit::rod::fresnel_kernel;
use num_complex::Complex64;
use proptest::prelude::*;

fn unit_disk() -> DiskSpec {
    DiskSpec::new(1.0).unwrap()
}

/// ∫ e^{i(βx + x²/2t)} with a C¹ cos² taper on [X, 2X]; no Fresnel tails.
fn tapered_chirp(beta: f64, t: f64) -> Complex64 {
    let x_cut: f64 = 30.0;
    let taper = |x: f64| {
        let a = x.abs();
        if a <= x_cut {
            1.0
        } else {
            (0.5 * PI * (a - x_cut) / x_cut).cos().powi(2)
        }
    };
    let pts = phase_split(t, -2.0 * x_cut, 2.0 * x_cut);
    let mut acc = Complex64::new(0.0, 0.0);
    for w in pts.windows(2) {
        let ph = |x: f64| beta * x + x * x / (2.0 * t);
        let re = integrate_adaptive(|x| taper(x) * ph(x).cos(), w[0], w[1], 1e-12).unwrap().value;
        let im = integrate_adaptive(|x| taper(x) * ph(x).sin(), w[0], w[1], 1e-12).unwrap().value;
        acc += Complex64::new(re, im);
    }
    acc
}

#[test]
fn one_dimension_is_the_rod_kernel() {
    for i in 0..=20 {
        let x = -4.0 + 0.4 * i as f64;
        for t in [0.3, 1.0, 7.0] {
            let a = plate_kernel(&[x], t).unwrap();
            let b = fresnel_kernel(x, t).unwrap();
            assert!((a - b).abs() <= 1e-15, "{a} vs {b}");
        }
    }
}

#[test]
fn two_dimensional_law() {
    assert!(plate_kernel(&[0.0, 0.0], 1.0).unwrap().abs() < 1e-16);
    for (x1, x2, t) in [(0.3f64, -1.2f64, 1.0f64), (2.0, 0.5, 0.4), (-1.5, 1.5, 3.0)] {
        let want = ((x1 * x1 + x2 * x2) / (2.0 * t)).sin() / (2.0 * PI * t);
        assert!((plate_kernel(&[x1, x2], t).unwrap() - want).abs() < 1e-15);
    }
}

#[test]
fn two_dimensional_mass() {
    for t in [0.5, 1.0, 3.0] {
        let m = plate_mass_2d(t).unwrap();
        assert!((m - 1.0).abs() <= 1e-6, "t={t}: {m}");
    }
}

#[test]
fn fourier_closed_forms() {
    assert_eq!(plate_fourier(&[0.0, 0.0, 0.0], 2.0).unwrap(), 1.0);
    for d in 1..=4 {
        let beta = 0.8;
        let got = plate_fourier(&vec![beta; d], 1.5).unwrap();
        assert!((got - (beta * beta * d as f64 * 1.5 / 2.0).cos()).abs() < 1e-15);
    }
}

#[test]
fn fourier_two_dimensional_numeric() {
    let (b1, b2, t) = (1.0, 0.5, 1.0);
    let want = plate_fourier(&[b1, b2], t).unwrap();
    let got = plate_fourier_numeric_2d(b1, b2, t, 1e-10).unwrap();
    assert!((got - want).abs() <= 1e-4, "{got} vs {want}");
    // oracle: tapered brute quadrature of the same product split
    let plus = tapered_chirp(b1, t) * tapered_chirp(b2, t);
    let minus = (tapered_chirp(-b1, t) * tapered_chirp(-b2, t)).conj();
    let oracle = ((plus - minus) / Complex64::new(0.0, 2.0)).re / (2.0 * PI * t);
    assert!((oracle - want).abs() <= 1e-4, "{oracle} vs {want}");
}

#[test]
fn nonfactorization_examples() {
    assert!(nonfactorization_gap(1.0, 2.0, 1.0).unwrap().abs() <= 1e-14);
    assert!(nonfactorization_gap(0.0, 0.0, 1.0).unwrap().abs() <= 1e-14);
}

#[test]
fn plate_pde_residual_two_dimensions() {
    let d2 = |x: f64| StencilSpec::default_for(2, x).unwrap();
    let d4 = |x: f64| StencilSpec::default_for(4, x).unwrap();
    for x1 in [0.4, 1.0, 1.6] {
        for x2 in [-0.8, 0.3, 1.2] {
            for t in [0.8, 1.5] {
                let u = |a: f64, b: f64, s: f64| plate_kernel(&[a, b], s).unwrap();
                let utt = finite_diff(|s| u(x1, x2, s), t, &d2(t));
                let u1111 = finite_diff(|a| u(a, x2, t), x1, &d4(x1));
                let u2222 = finite_diff(|b| u(x1, b, t), x2, &d4(x2));
                let u1122 = finite_diff(|a| finite_diff(|b| u(a, b, t), x2, &d2(x2)), x1, &d2(x1));
                let res = (utt + 0.25 * (u1111 + 2.0 * u1122 + u2222)).abs() / utt.abs().max(1.0);
                assert!(res <= 1e-3, "({x1},{x2},{t}): {res:e}");
            }
        }
    }
}

#[test]
fn heat_kernels_on_the_disk() {
    let d = unit_disk();
    let mass = integrate_adaptive(|r| disk_heat_kernels(r, 1.0, d).unwrap().1, 0.0, 1.0, 1e-13).unwrap().value;
    assert!((mass - 1.0).abs() < 1e-12, "{mass}");
    let near = disk_heat_kernels(1.0 - 1e-12, 1.0, d).unwrap().0;
    assert!((near - 2.0 * (-0.5f64).exp()).abs() < 1e-10);
    let p = disk_heat_kernels(0.5, 1.0, d).unwrap().1;
    assert!((p - 1.523_930_717_185_199_2).abs() < 1e-14);
}

#[test]
fn vibration_profiles() {
    let d = unit_disk();
    let golden = [
        (1.0, 0.25, 1.020_603_160_608_707_9),
        (1.0, 0.5, 1.033_972_160_210_909_4),
        (1.0, 0.75, 1.053_928_672_946_996_8),
        (50.0, 0.25, 0.003_198_864_131_471_117_2),
        (50.0, 0.5, 0.000_849_786_631_649_366_1),
        (50.0, 0.75, 0.000_468_036_233_738_426_15),
        (100.0, 0.25, 0.000_802_271_939_640_864_2),
        (100.0, 0.5, 0.000_212_486_663_678_122_7),
        (100.0, 0.75, 0.000_117_012_681_261_401_2),
    ];
    for (t, r, want) in golden {
        let q = disk_vibration_kernels(r, t, d).unwrap().0;
        assert!((q - want).abs() <= 1e-14 * want.abs().max(1.0), "t={t} r={r}: {q} vs {want}");
    }
}

#[test]
fn neumann_edge() {
    for t in [0.5, 1.0, 5.0] {
        for radius in [1.0, 2.0] {
            let slope = disk_edge_slope(t, DiskSpec::new(radius).unwrap()).unwrap();
            assert!(slope.abs() <= 1e-6, "t={t} R={radius}: {slope:e}");
        }
    }
}

#[test]
fn disk_mass_is_one() {
    for t in [0.5, 1.0, 5.0] {
        let m = disk_mass(t, unit_disk()).unwrap();
        assert!((m - 1.0).abs() <= 1e-6, "t={t}: {m}");
    }
}

#[test]
fn image_term_maps_outside_the_disk() {
    // ∫_ε^R (R⁴/r³t) sin(R⁴/2r²t) dr = cos(R²/2t) − cos(R⁴/2ε²t)
    let (eps, t) = (0.25, 1.0);
    let f = |r: f64| (1.0 / (r * r * r * t)) * (1.0 / (2.0 * r * r * t)).sin();
    let pts: Vec<f64> = (0..=400).map(|i| eps + (1.0 - eps) * i as f64 / 400.0).collect();
    let got: f64 = pts.windows(2).map(|w| integrate_adaptive(f, w[0], w[1], 1e-14).unwrap().value).sum();
    let want = (0.5f64).cos() - (1.0 / (2.0 * eps * eps)).cos();
    assert!((got - want).abs() < 1e-10, "{got} vs {want}");
}

#[test]
fn free_term_solves_radial_plate_equation() {
    let r4 = |r: f64| StencilSpec::default_for(4, r).unwrap();
    for radius in [1.0, 2.0] {
        for k in 0..=6 {
            let r = radius * (0.3 + 0.1 * k as f64);
            for t in [1.0, 5.0] {
                let free = |r: f64, t: f64| (r * r / (2.0 * t)).sin() / t;
                let res = radial_residual(free, r, t, &r4(r));
                let scale = finite_diff(|s| free(r, s), t, &StencilSpec::default_for(2, t).unwrap()).abs().max(1.0);
                assert!(res.abs() / scale <= 1e-2, "r={r} t={t}: {res:e}");
            }
        }
    }
}

#[test]
fn image_term_leaves_a_radial_residual() {
    let d = unit_disk();
    let q = |r: f64, t: f64| disk_vibration_kernels(r, t, d).unwrap().0;
    let r = 0.7;
    let res = radial_residual(q, r, 1.0, &StencilSpec::default_for(4, r).unwrap());
    assert!(res.abs() > 100.0, "{res:e}");
}

fn radial_residual<F: Fn(f64, f64) -> f64>(u: F, r: f64, t: f64, d4: &StencilSpec) -> f64 {
    let h = d4.step;
    let d = |order: usize| finite_diff(|s| u(s, t), r, &StencilSpec::new(order, h, 7).unwrap());
    let utt = finite_diff(|s| u(r, s), t, &StencilSpec::default_for(2, t).unwrap());
    let bi = d(4) + 2.0 * d(3) / r - d(2) / (r * r) + d(1) / (r * r * r);
    utt + 0.25 * bi
}

#[test]
fn cartesian_forms() {
    let d = unit_disk();
    let q = disk_density_cartesian(0.3, 0.4, 1.0, d, DiskForm::Q).unwrap();
    assert!((q - 0.354_607_711_071_529_63).abs() < 1e-15);
    let polar = disk_density_from_polar(0.3, 0.4, 1.0, d, DiskForm::Q).unwrap();
    assert!((polar - 0.329_123_560_633_942_74).abs() < 1e-15);
    for which in [DiskForm::P, DiskForm::Q] {
        for (x, y) in [(0.3, 0.4), (-0.1, 0.6), (0.55, -0.2)] {
            let v = disk_density_cartesian(x, y, 0.7, d, which).unwrap();
            assert_eq!(v, disk_density_cartesian(y, x, 0.7, d, which).unwrap());
            assert_eq!(v, disk_density_cartesian(-x, y, 0.7, d, which).unwrap());
        }
    }
    // polar originals: (1/2π)p̄_ref(|x|)/|x| on the axis
    let (x, t) = (0.6, 1.3);
    let pbar = disk_vibration_kernels(x, t, d).unwrap().1;
    let on_axis = disk_density_from_polar(x, 0.0, t, d, DiskForm::P).unwrap();
    assert!((on_axis - pbar / (2.0 * PI * x)).abs() < 1e-15);
}

#[test]
fn printed_cartesian_forms_differ_from_polar() {
    let d = unit_disk();
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let a = 0.37 * i as f64;
        let rho = 0.2 + 0.035 * i as f64;
        let (x, y) = (rho * a.cos(), rho * a.sin());
        for which in [DiskForm::P, DiskForm::Q] {
            let printed = disk_density_cartesian(x, y, 1.0, d, which).unwrap();
            let polar = disk_density_from_polar(x, y, 1.0, d, which).unwrap();
            worst = worst.max((printed - polar).abs());
        }
    }
    assert!(worst > 1e-2, "{worst}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn nonfactorization_identity(x1 in -3.0f64..3.0, x2 in -3.0f64..3.0, t in 0.5f64..3.0) {
        prop_assert!(nonfactorization_gap(x1, x2, t).unwrap().abs() <= 1e-14);
    }

    #[test]
    fn cartesian_depends_on_radius_only(rho in 0.05f64..0.95, a in 0.0f64..6.28) {
        let d = DiskSpec::new(1.0).unwrap();
        let (x, y) = (rho * a.cos(), rho * a.sin());
        let v = disk_density_from_polar(x, y, 1.0, d, DiskForm::Q).unwrap();
        let w = disk_density_from_polar(rho, 0.0, 1.0, d, DiskForm::Q).unwrap();
        prop_assert!((v - w).abs() <= 1e-9 * w.abs().max(1.0));
    }
}
