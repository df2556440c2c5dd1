use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use fresnelkit::fracrod::biquadratic_bernstein;
use fresnelkit::quad::{fourier_numeric, integrate_adaptive};
use fresnelkit::rod::fresnel_kernel;
use fresnelkit::subord::*;
use fresnelkit::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn depth(n: u32) -> IterationDepth {
    IterationDepth::new(n)
}

#[test]
fn biquadratic_transform() {
    let k = biquadratic_kernel();
    for (beta, t) in [(0.0, 1.0), (1.0, 1.0), (0.5, 1.0), (1.5, 0.5), (1.0, 2.0), (0.7, 1.5)] {
        let v = fourier_numeric(&k, beta, t, 1e-8).unwrap();
        let want = (-f64::powi(beta, 4) * t / 8.0).exp();
        assert!((v.re - want).abs() <= 1e-5, "beta={beta} t={t}: {} vs {want}", v.re);
    }
}

#[test]
fn biquadratic_origin_and_half_time() {
    // mpmath quadrature
    let golden = 0.485_225_602_283_038_27;
    assert!((biquadratic_from_subordination(0.0, 1.0).unwrap() - golden).abs() < 1e-12);
    for x in [0.0, 0.6, 1.5, 3.0] {
        for t in [0.5, 1.0, 2.0] {
            let a = biquadratic_from_subordination(x, t).unwrap();
            let b = biquadratic_bernstein(x, t / 2.0).unwrap();
            assert!((a - b).abs() <= 1e-7, "x={x} t={t}: {a} vs {b}");
        }
    }
}

#[test]
fn double_cauchy_closed_values() {
    for t in [0.5, 1.0, 3.0] {
        let centre = double_cauchy_density(0.0, t).unwrap();
        assert!((centre - 1.0 / (PI * SQRT_2 * t)).abs() < 1e-15);
        assert!((double_cauchy_density(t, t).unwrap() - centre).abs() < 1e-15);
    }
}

#[test]
fn double_cauchy_mass_is_one() {
    for t in [0.5, 1.0, 2.0] {
        let m = double_cauchy_mass(t).unwrap();
        assert!((m - 1.0).abs() <= 1e-8, "t={t}: {m}");
    }
}

#[test]
fn double_cauchy_integral_representation() {
    let a = double_cauchy_integral(1.0, 1.0).unwrap();
    let b = double_cauchy_density(1.0, 1.0).unwrap();
    assert!((a - b).abs() <= 1e-6, "{a} vs {b}");
}

#[test]
fn double_cauchy_is_positive() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10_000 {
        let t = rng.gen_range(0.1..10.0);
        let x = rng.gen_range(-100.0..100.0) * t;
        assert!(double_cauchy_density(x, t).unwrap() > 0.0);
    }
}

#[test]
fn double_cauchy_has_two_maxima() {
    let argmax = |t: f64| {
        let mut best = (0.0, f64::MIN);
        for i in 0..=10_000 {
            let x = -5.0 * t + 1e-3 * t * i as f64;
            let v = double_cauchy_density(x, t).unwrap();
            if v > best.1 {
                best = (x, v);
            }
        }
        best.0
    };
    let base = argmax(1.0);
    assert!(base.abs() > 0.1);
    let mirror = double_cauchy_density(-base, 1.0).unwrap();
    assert!((mirror - double_cauchy_density(base, 1.0).unwrap()).abs() < 1e-15);
    assert!(mirror > double_cauchy_density(0.0, 1.0).unwrap());
    for t in [2.0, 4.0] {
        let ratio = argmax(t).abs() / (t * base.abs());
        assert!((ratio - 1.0).abs() < 0.02, "t={t}: {ratio}");
    }
}

#[test]
fn double_cauchy_tail() {
    for t in [0.5, 1.0, 2.0] {
        let x = 1e3 * t;
        let v = x * x * double_cauchy_density(x, t).unwrap();
        let want = t / (PI * SQRT_2);
        assert!((v / want - 1.0).abs() < 1e-2);
    }
}

#[test]
fn double_cauchy_pair_decomposition() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10 {
        let x = rng.gen_range(-5.0..5.0);
        let t = rng.gen_range(0.2..3.0);
        let a = double_cauchy_pair(x, t).unwrap();
        let b = double_cauchy_density(x, t).unwrap();
        assert!((a - b).abs() <= 1e-12, "({x},{t}): {a} vs {b}");
    }
}

#[test]
fn double_cauchy_biharmonic() {
    for (x, t) in [(1.0, 1.0), (0.0, 2.0), (1.7, 0.8)] {
        let r = double_cauchy_pde_residual(x, t).unwrap();
        assert!(r <= 1e-3, "({x},{t}): {r:e}");
    }
}

#[test]
fn charfn_values() {
    assert!((iterated_charfn(1.0, 1.0, depth(1)).unwrap() - 0.125f64.cos()).abs() < 1e-16);
    for n in 0..5 {
        assert_eq!(iterated_charfn(0.0, 2.0, depth(n)).unwrap(), 1.0);
    }
    for (beta, t) in [(0.4, 1.0), (2.0, 0.3)] {
        let v = iterated_charfn(beta, t, depth(0)).unwrap();
        assert!((v - (beta * beta * t / 2.0).cos()).abs() < 1e-15);
    }
}

#[test]
fn depth_zero_inversion_is_fresnel() {
    for t in [0.5, 1.0, 2.0] {
        for i in 0..=12 {
            let x = -3.0 + 0.5 * i as f64;
            let a = iterated_density(x, t, depth(0)).unwrap();
            let b = fresnel_kernel(x, t).unwrap();
            assert!((a - b).abs() <= 1e-6, "x={x} t={t}: {a} vs {b}");
        }
    }
}

/// 2∫₀^∞ fresnel_kernel(x, s) fresnel_kernel(s, t) ds: s < 1 through
/// w = x²/2s, s > 1 between zeros of the chirp, both with averaged partial sums.
fn composition(x: f64, t: f64) -> f64 {
    let p = |x: f64, s: f64| fresnel_kernel(x, s).unwrap();
    let smooth = |sums: Vec<f64>| {
        let mut level = sums[sums.len() - 40..].to_vec();
        while level.len() > 1 {
            level = level.windows(2).map(|q| 0.5 * (q[0] + q[1])).collect();
        }
        level[0]
    };
    let near = |w: f64| {
        let s = x * x / (2.0 * w);
        2.0 * p(x, s) * p(s, t) * x * x / (2.0 * w * w)
    };
    let w0 = x * x / 2.0;
    let mut edges = vec![w0];
    let mut k = ((w0 - FRAC_PI_4) / PI + 0.5).ceil();
    while edges.len() < 600 {
        edges.push(FRAC_PI_4 + (k + 0.5) * PI);
        k += 1.0;
    }
    let mut acc = 0.0;
    let sums = edges
        .windows(2)
        .map(|e| {
            acc += integrate_adaptive(near, e[0], e[1], 1e-14).unwrap().value;
            acc
        })
        .collect();
    let a = smooth(sums);
    let far = |s: f64| 2.0 * p(x, s) * p(s, t);
    let zero = |k: f64| (2.0 * t * (FRAC_PI_4 + (k + 0.5) * PI)).sqrt();
    let mut edges = vec![1.0];
    let mut k = 0.0;
    while edges.len() < 600 {
        if zero(k) > 1.0 {
            edges.push(zero(k));
        }
        k += 1.0;
    }
    let mut acc = 0.0;
    let sums = edges
        .windows(2)
        .map(|e| {
            acc += integrate_adaptive(far, e[0], e[1], 1e-14).unwrap().value;
            acc
        })
        .collect();
    a + smooth(sums)
}

#[test]
fn depth_one_matches_composition() {
    let inv = iterated_density(0.5, 1.0, depth(1)).unwrap();
    let direct = composition(0.5, 1.0);
    // mpmath oscillatory quadrature of both forms
    let golden = 0.425_188_643_601_511_67;
    assert!((direct - golden).abs() <= 1e-6, "{direct}");
    assert!((inv - direct).abs() <= 1e-4, "{inv} vs {direct}");
    assert!((inv - golden).abs() <= 1e-9, "{inv}");
}

#[test]
fn deeper_inversions() {
    // mpmath oscillatory quadrature on the real axis
    for (n, x, golden) in [(2, 2.0, -0.049_283_181_225_669_034), (3, 8.0, 0.033_642_873_988_898_939)] {
        let v = iterated_density(x, 1.0, depth(n)).unwrap();
        assert!((v - golden).abs() <= 1e-9, "n={n}: {v}");
    }
    assert!(matches!(iterated_density(0.3, 1.0, depth(4)), Err(Error::DimensionGuard { .. })));
}

#[test]
fn multiplier_identity() {
    for n in 0..=3 {
        let r = iterated_pde_check(depth(n)).unwrap();
        assert!(r.passed, "{r:?}");
    }
}

proptest! {
    #[test]
    fn pair_matches_closed_form(x in -50.0f64..50.0, t in 0.05f64..5.0) {
        let a = double_cauchy_pair(x, t).unwrap();
        let b = double_cauchy_density(x, t).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * b.max(1.0));
    }

    #[test]
    fn double_cauchy_is_even(x in 0.0f64..50.0, t in 0.05f64..5.0) {
        prop_assert_eq!(double_cauchy_density(x, t).unwrap(), double_cauchy_density(-x, t).unwrap());
    }
}
