//! Laws of the Fresnel pseudo-process run on random clocks: the biquadratic
//! subordination, the double-Cauchy law and iterated compositions.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{check_time, Error, Result};
use crate::fracrod::{frac_decay_rate, fresnel_subordinated};
use crate::kernel::{Envelope, SignedKernel};
use crate::quad::{finite_diff, integrate_adaptive, StencilSpec};
use crate::verify::VerificationReport;

pub const MAX_DENSITY_DEPTH: u32 = 3;

/// Number of nested clocks n in F₁(|F₂(|… F_{n+1}(t)…|)|).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationDepth {
    pub n: u32,
}

impl IterationDepth {
    pub fn new(n: u32) -> Self {
        Self { n }
    }

    /// Power 2^{n+1} of β in the characteristic function.
    fn power(self) -> Result<i32> {
        if self.n > 16 {
            return Err(Error::DimensionGuard { got: self.n as usize, max: 16 });
        }
        Ok(1 << (self.n + 1))
    }
}

/// 2∫₀^∞ fresnel_kernel(x, s)·e^{−s²/2t}/√(2πt) ds.
pub fn biquadratic_from_subordination(x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    let norm = 2.0 / (2.0 * PI * t).sqrt();
    fresnel_subordinated(x, |s| norm * (-s * s / (2.0 * t)).exp(), t.sqrt())
}

pub fn biquadratic_kernel() -> SignedKernel {
    // the half-order kernel at t/2
    SignedKernel::new("biquadratic", Some(Envelope::Exponential(frac_decay_rate(0.5))), biquadratic_from_subordination)
}

/// (t/π√2)(t² + x²)/(t⁴ + x⁴).
pub fn double_cauchy_density(x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    let (t2, x2) = (t * t, x * x);
    Ok(t / (PI * SQRT_2) * (t2 + x2) / (t2 * t2 + x2 * x2))
}

/// (1/2π)[a/(a² + x²) + c.c.] with a = te^{iπ/4}.
pub fn double_cauchy_pair(x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    let a = Complex64::from_polar(t, FRAC_PI_4);
    let w = a / (a * a + x * x);
    Ok((w + w.conj()).re / (2.0 * PI))
}

/// ∫₀^∞ fresnel_kernel(x, s)·t e^{−t²/2s}/√(2πs³) ds.
pub fn double_cauchy_integral(x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    if x == 0.0 {
        return Err(Error::Domain("integral representation needs x ≠ 0".into()));
    }
    let g = |s: f64| {
        if s <= 0.0 {
            0.0
        } else {
            t * (-t * t / (2.0 * s)).exp() / (2.0 * PI * s.powi(3)).sqrt()
        }
    };
    fresnel_subordinated(x, g, t * t)
}

/// ∫_ℝ density: quadrature on [−X, X] with X = 10³t, tails from the expansion
/// x⁻² + t²x⁻⁴ − t⁴x⁻⁶ − t⁶x⁻⁸ of (t² + x²)/(t⁴ + x⁴).
pub fn double_cauchy_mass(t: f64) -> Result<f64> {
    check_time(t)?;
    let reach = 1e3 * t;
    let mut pts = vec![0.0, t];
    while *pts.last().unwrap() < reach {
        let next = 4.0 * pts.last().unwrap();
        pts.push(next.min(reach));
    }
    let mut core = 0.0;
    for w in pts.windows(2) {
        core += integrate_adaptive(|x| double_cauchy_density(x, t).unwrap(), w[0], w[1], 1e-14)?.value;
    }
    let y = t / reach;
    let tail = (y + y.powi(3) / 3.0 - y.powi(5) / 5.0 - y.powi(7) / 7.0) / (PI * SQRT_2);
    Ok(2.0 * (core + tail))
}

/// |∂⁴u/∂t⁴ + ∂⁴u/∂x⁴| relative to max(1, |∂⁴u/∂t⁴|, |∂⁴u/∂x⁴|), 7-point stencils.
pub fn double_cauchy_pde_residual(x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    let tt = StencilSpec::default_for(4, t)?;
    let xx = StencilSpec::default_for(4, x)?;
    if t - 3.0 * tt.step <= 0.0 {
        return Err(Error::Domain(format!("time stencil at t = {t} crosses zero")));
    }
    let u = |x: f64, t: f64| double_cauchy_density(x, t).unwrap();
    let a = finite_diff(|s| u(x, s), t, &tt);
    let b = finite_diff(|y| u(y, t), x, &xx);
    Ok((a + b).abs() / a.abs().max(b.abs()).max(1.0))
}

pub fn double_cauchy_kernel() -> SignedKernel {
    SignedKernel::new("double-cauchy", Some(Envelope::PowerLaw(2.0)), double_cauchy_density)
}

/// cos(2t(β/2)^{2^{n+1}}).
pub fn iterated_charfn(beta: f64, t: f64, depth: IterationDepth) -> Result<f64> {
    check_time(t)?;
    Ok((2.0 * t * (beta / 2.0).powi(depth.power()?)).cos())
}

/// (1/π)∫₀^∞ cos(βx)cos(cβ^m)dβ with m = 2^{n+1}, c = 2t/2^m. The integral
/// runs on the real axis up to B beyond the stationary point of βx − cβ^m and
/// continues on the ray B + ρe^{iπ/2m}, where e^{icz^m} decays.
pub fn iterated_density(x: f64, t: f64, depth: IterationDepth) -> Result<f64> {
    check_time(t)?;
    if depth.n > MAX_DENSITY_DEPTH {
        return Err(Error::DimensionGuard { got: depth.n as usize, max: MAX_DENSITY_DEPTH as usize });
    }
    let m = depth.power()?;
    let mf = m as f64;
    let c = 2.0 * t / 2f64.powi(m);
    let ax = x.abs();
    // c·m·B^{m−1} ≥ 1.5|x| and cB^m ≥ 1
    let b = (1.5 * ax / (c * mf)).powf(1.0 / (mf - 1.0)).max((1.0 / c).powf(1.0 / mf));

    let turns = ((c * b.powi(m) + ax * b) / PI).ceil() as usize + 1;
    let h = b / turns as f64;
    let mut real = 0.0;
    for k in 0..turns {
        let a = k as f64 * h;
        real += integrate_adaptive(|s| (s * x).cos() * (c * s.powi(m)).cos(), a, a + h, 1e-14)?.value;
    }

    let dir = Complex64::from_polar(1.0, PI / (2.0 * mf));
    let slope = (c * mf * b.powi(m - 1) - ax) * dir.im;
    let reach = (40.0 / c).powf(1.0 / mf).max(40.0 / slope);
    let ray = |rho: f64| {
        let z = b + dir * rho;
        ((z * x).cos() * (Complex64::i() * c * z.powi(m)).exp() * dir).re
    };
    let mut pts = vec![0.0];
    let mut r = reach / 256.0;
    while r < reach {
        pts.push(r);
        r *= 2.0;
    }
    pts.push(reach);
    let mut tail = 0.0;
    for w in pts.windows(2) {
        tail += integrate_adaptive(ray, w[0], w[1], 1e-14)?.value;
    }
    Ok((real + tail) / PI)
}

pub fn iterated_kernel(depth: IterationDepth) -> SignedKernel {
    SignedKernel::new("iterated", None, move |x, t| iterated_density(x, t, depth)).with_param("depth", depth.n as f64)
}

/// ∂²U/∂t² against −2^{−2(2^{n+1}−1)}β^{2^{n+2}}U for U = iterated_charfn,
/// the t-derivative taken analytically, over β ∈ [0, 2], t ∈ [0.25, 2].
pub fn iterated_pde_check(depth: IterationDepth) -> Result<VerificationReport> {
    let m = depth.power()?;
    let coeff = 2f64.powi(-2 * (m - 1));
    let mut worst: f64 = 0.0;
    let mut evaluations = 0;
    for i in 0..=20 {
        let beta = 0.1 * i as f64;
        for j in 1..=8 {
            let t = 0.25 * j as f64;
            let u = iterated_charfn(beta, t, depth)?;
            let a = (beta / 2.0).powi(m);
            let lhs = -4.0 * a * a * (2.0 * t * a).cos();
            let rhs = -coeff * beta.powi(2 * m) * u;
            worst = worst.max((lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0));
            evaluations += 1;
        }
    }
    Ok(VerificationReport::new(
        format!("subord.iterated_multiplier.n{}", depth.n),
        worst,
        1e-12,
        evaluations,
        format!("U'' = -2^-{} beta^{} U on a 21x8 (beta,t) grid", 2 * (m - 1), 2 * m),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_guards() {
        assert!(matches!(
            iterated_density(0.1, 1.0, IterationDepth::new(4)),
            Err(Error::DimensionGuard { got: 4, max: 3 })
        ));
        assert!(iterated_charfn(1.0, 1.0, IterationDepth::new(10)).is_ok());
        assert!(double_cauchy_integral(0.0, 1.0).is_err());
    }
}
