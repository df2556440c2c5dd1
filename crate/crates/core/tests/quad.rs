use std::f64::consts::PI;

use fresnelkit::quad::*;
use fresnelkit::specfun::fresnel_cs;
use fresnelkit::{Envelope, SignedKernel};
use proptest::prelude::*;

fn fresnel(x: f64, t: f64) -> f64 {
    (x * x / (2.0 * t) - PI / 4.0).cos() / (2.0 * PI * t).sqrt()
}

fn fresnel_kernel() -> SignedKernel {
    SignedKernel::new("test-fresnel", Some(Envelope::OscillatoryUnit), |x, t| Ok(fresnel(x, t)))
}

#[test]
fn adaptive_examples() {
    let r = integrate_adaptive(f64::cos, 0.0, PI / 2.0, 1e-12).unwrap();
    assert!((r.value - 1.0).abs() < 1e-13);
    let r = integrate_adaptive(|w| (w * w).cos(), 0.0, 4.0, 1e-13).unwrap();
    assert!((r.value - fresnel_cs(4.0).0).abs() < 1e-12);
    let r = integrate_adaptive(|_| 1.0, 0.0, 1.0, 1e-12).unwrap();
    assert!((r.value - 1.0).abs() < 1e-15);
    assert!(r.evaluations > 0 && r.err_estimate >= 0.0);
}

#[test]
fn oscillatory_examples() {
    let r = integrate_oscillatory(Amplitude::Unit, 1.0, f64::NEG_INFINITY, f64::INFINITY, 1e-12).unwrap();
    assert!((r.value / (2.0 * PI).sqrt() - 1.0).abs() < 1e-12);
    let r = integrate_oscillatory(Amplitude::Unit, 1.0, 0.0, 0.0, 1e-12).unwrap();
    assert_eq!(r.value, 0.0);

    let amp = |w: f64| (-w).exp();
    let got = integrate_oscillatory(Amplitude::Decaying { f: &amp, rate: 1.0 }, 1.0, 1.0, f64::INFINITY, 1e-12).unwrap();
    let brute = integrate_adaptive(|w| (-w).exp() * (w * w / 2.0 - PI / 4.0).cos(), 1.0, 40.0, 1e-13).unwrap();
    assert!((got.value - brute.value).abs() <= 1e-11 + (-40f64).exp(), "{} vs {}", got.value, brute.value);
}

#[test]
fn fourier_of_fresnel_kernel() {
    let k = fresnel_kernel();
    let v = fourier_numeric(&k, 0.0, 1.0, 1e-10).unwrap();
    assert!((v.re - 1.0).abs() < 1e-8 && v.im.abs() < 1e-10);
    let v = fourier_numeric(&k, 1.0, 1.0, 1e-10).unwrap();
    assert!((v.re - 0.5f64.cos()).abs() < 1e-8 && v.im.abs() < 1e-10);
}

#[test]
fn fourier_of_double_cauchy_mass() {
    let dc = SignedKernel::new("test-double-cauchy", Some(Envelope::PowerLaw(2.0)), |x: f64, t: f64| {
        Ok(t / (PI * 2f64.sqrt()) * (t * t + x * x) / (t.powi(4) + x.powi(4)))
    });
    let v = fourier_numeric(&dc, 0.0, 2.0, 1e-10).unwrap();
    assert!((v.re - 1.0).abs() < 1e-8, "{v}");
}

#[test]
fn missing_envelope_is_an_error() {
    let k = SignedKernel::new("bare", None, |x, t| Ok(fresnel(x, t)));
    assert!(matches!(fourier_numeric(&k, 1.0, 1.0, 1e-8), Err(fresnelkit::Error::EnvelopeMissing)));
}

#[test]
fn laplace_examples() {
    let r = laplace_numeric(|_| 1.0, 2.0, 1e-12, None).unwrap();
    assert!((r.value - 0.5).abs() < 1e-12);
    let r = laplace_numeric(|t| (-t).exp(), 1.0, 1e-12, None).unwrap();
    assert!((r.value - 0.5).abs() < 1e-12);
    let r = laplace_numeric(|t| fresnel(1.0, t), 1.0, 1e-10, None).unwrap();
    let want = (-1f64).exp() * (1.0 - PI / 4.0).cos() / 2f64.sqrt();
    assert!((r.value - want).abs() < 1e-8, "{} vs {want}", r.value);
}

#[test]
fn laplace_rejects_nonintegrable_origin() {
    let r = laplace_numeric(|t| 1.0 / t, 1.0, 1e-10, None);
    assert!(matches!(r, Err(fresnelkit::Error::Divergent(_))));
}

#[test]
fn stencil_examples() {
    let s4 = StencilSpec::new(4, 0.37, 7).unwrap();
    assert!((finite_diff(|x| x.powi(4), -1.3, &s4) - 24.0).abs() < 1e-9);
    let s2 = StencilSpec::new(2, 1e-3, 5).unwrap();
    assert!(finite_diff(f64::sin, 0.0, &s2).abs() <= 1e-9);
    let s = StencilSpec::new(4, 5e-3, 7).unwrap();
    let f = |x: f64| (x * x / 2.0).cos();
    let x = 1.0f64;
    let u = x * x / 2.0;
    let exact = x.powi(4) * u.cos() + 6.0 * x * x * u.sin() - 3.0 * u.cos();
    assert!((finite_diff(f, x, &s) - exact).abs() < 1e-4);
}

#[test]
fn stencil_order_on_exponential() {
    for (order, points) in [(1, 3), (2, 5), (3, 5), (4, 7)] {
        let h = 0.1;
        let e1 = (finite_diff(f64::exp, 0.3, &StencilSpec::new(order, h, points).unwrap()) - 0.3f64.exp()).abs();
        let e2 = (finite_diff(f64::exp, 0.3, &StencilSpec::new(order, h / 2.0, points).unwrap()) - 0.3f64.exp()).abs();
        assert!(e1 / e2 >= 3.5, "order {order}: ratio {}", e1 / e2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn adaptive_is_linear(p in 0.5f64..4.0, q in -1.0f64..1.0, alpha in -3.0f64..3.0, beta in -3.0f64..3.0) {
        let tol = 1e-12;
        let f = |x: f64| (p * x).sin();
        let g = |x: f64| (q * x).exp();
        let rf = integrate_adaptive(f, -1.0, 2.0, tol).unwrap();
        let rg = integrate_adaptive(g, -1.0, 2.0, tol).unwrap();
        let rs = integrate_adaptive(|x| alpha * f(x) + beta * g(x), -1.0, 2.0, tol).unwrap();
        let bound = 2.0 * (alpha.abs() * rf.err_estimate + beta.abs() * rg.err_estimate + rs.err_estimate) + 1e-14;
        prop_assert!((rs.value - alpha * rf.value - beta * rg.value).abs() <= bound);
    }

    #[test]
    fn oscillatory_unit_matches_fresnel_closed_form(a in -12.0f64..12.0, len in 0.01f64..15.0, t in 0.2f64..5.0) {
        let b = a + len;
        let r = integrate_oscillatory(Amplitude::Unit, t, a, b, 1e-12).unwrap();
        let s = (2.0 * t).sqrt();
        let (ca, sa) = fresnel_cs(a / s);
        let (cb, sb) = fresnel_cs(b / s);
        let closed = t.sqrt() * ((cb + sb) - (ca + sa));
        prop_assert!((r.value - closed).abs() <= 1e-10);
    }
}
