use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::gk::composite;

#[allow(clippy::excessive_precision)]
const AI0: f64 = 0.355028053887817239260063186004;
#[allow(clippy::excessive_precision)]
const AIP0: f64 = 0.258819403792806798405183560189;

const SERIES_MAX: f64 = 3.0;

/// Outside the sector |arg z| ≤ π/4 the Maclaurin series is the only
/// evaluator; beyond this modulus its cancellation exceeds 1e-11.
pub const AIRY_SERIES_CUTOFF: f64 = 6.0;

const SECTOR: f64 = PI / 4.0 + 1e-12;

fn maclaurin(z: Complex64) -> Complex64 {
    let z3 = z * z * z;
    let mut f = Complex64::new(1.0, 0.0);
    let mut g = z;
    let mut tf = f;
    let mut tg = g;
    for k in 1..200 {
        let k3 = 3.0 * k as f64;
        tf = tf * z3 / ((k3 - 1.0) * k3);
        tg = tg * z3 / (k3 * (k3 + 1.0));
        f += tf;
        g += tg;
        if tf.norm() + tg.norm() < 1e-18 * (f.norm() + g.norm()) {
            break;
        }
    }
    f * AI0 - g * AIP0
}

// Ai(z) = (1/π)√(z/3) K_{1/3}(ζ), K_ν(ζ) = ∫₀^∞ e^{−ζ cosh s} cosh(νs) ds
fn bessel_k_form(z: Complex64) -> Complex64 {
    let zeta = z.powf(1.5) * (2.0 / 3.0);
    if zeta.re > 740.0 {
        return Complex64::new(0.0, 0.0);
    }
    let smax = (1.0 + 45.0 / zeta.re).acosh();
    let turns = zeta.im.abs() * 45.0 / zeta.re / (2.0 * PI);
    let panels = (8.0 + 2.0 * turns).ceil() as usize;
    let k: Complex64 = composite(
        |s: f64| (-(zeta * (s.cosh() - 1.0))).exp() * (s / 3.0).cosh(),
        0.0,
        smax,
        panels,
    );
    (z / 3.0).sqrt() / PI * (-zeta).exp() * k
}

/// Airy function Ai(z) on the principal branch.
pub fn airy_ai(z: Complex64) -> Result<Complex64> {
    let r = z.norm();
    if !r.is_finite() {
        return Err(Error::Overflow(r));
    }
    if r <= SERIES_MAX {
        return Ok(maclaurin(z));
    }
    if z.arg().abs() <= SECTOR {
        return Ok(bessel_k_form(z));
    }
    if r <= AIRY_SERIES_CUTOFF {
        return Ok(maclaurin(z));
    }
    Err(Error::Overflow(r))
}

/// Real-argument convenience wrapper.
pub fn airy_ai_real(x: f64) -> Result<f64> {
    airy_ai(Complex64::new(x, 0.0)).map(|v| v.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branches_agree_across_switch() {
        for (r, th) in [(3.2, 0.0), (3.5, PI / 4.0), (4.5, -PI / 4.0), (5.0, 0.3)] {
            let z = Complex64::from_polar(r, th);
            let a = maclaurin(z);
            let b = bessel_k_form(z);
            assert!((a - b).norm() < 1e-11 * a.norm().max(1e-2), "z={z}: {a} vs {b}");
        }
    }

    #[test]
    fn far_left_is_rejected() {
        assert!(matches!(airy_ai(Complex64::new(-7.0, 0.0)), Err(Error::Overflow(_))));
        assert!(airy_ai(Complex64::new(-5.0, 0.0)).is_ok());
    }

    #[test]
    fn far_right_underflows_to_zero() {
        assert_eq!(airy_ai_real(200.0).unwrap(), 0.0);
    }
}
