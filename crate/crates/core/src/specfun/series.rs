//! Power-series special functions: Mittag-Leffler, Wright, modified Bessel I,
//! and the M-Wright density.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::{ln_gamma_sign, rgamma_real};
use crate::error::{Error, Result};
use crate::quad::gk::composite;

/// Truncation control for the power series in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-15,
            max_terms: 500,
        }
    }
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0) || max_terms == 0 {
            return Err(Error::Domain(format!(
                "series control needs rel_tol > 0 and max_terms >= 1 (got {rel_tol}, {max_terms})"
            )));
        }
        Ok(Self { rel_tol, max_terms })
    }
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

impl CompensatedSum {
    pub fn add(&mut self, v: Complex64) {
        self.sum = Complex64::new(
            neumaier(self.sum.re, v.re, &mut self.comp.re),
            neumaier(self.sum.im, v.im, &mut self.comp.im),
        );
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn neumaier(sum: f64, v: f64, comp: &mut f64) -> f64 {
    let t = sum + v;
    if sum.abs() >= v.abs() {
        *comp += (sum - t) + v;
    } else {
        *comp += (v - t) + sum;
    }
    t
}

/// Sums `term(k)` for k = 0, 1, ... until two consecutive terms fall below
/// rel_tol·max(1, |sum|). Returns (sum, largest |term| seen).
pub fn sum_series<F>(ctl: &SeriesControl, mut term: F) -> Result<(Complex64, f64)>
where
    F: FnMut(usize) -> Complex64,
{
    let mut acc = CompensatedSum::default();
    let mut small = 0;
    let mut biggest = 0.0f64;
    for k in 0..ctl.max_terms {
        let v = term(k);
        acc.add(v);
        let m = v.norm();
        biggest = biggest.max(m);
        if m <= ctl.rel_tol * acc.value().norm().max(1.0) {
            small += 1;
            if small == 2 {
                return Ok((acc.value(), biggest));
            }
        } else {
            small = 0;
        }
    }
    Err(Error::BudgetExceeded(ctl.max_terms))
}

/// Largest |z| accepted by the Mittag-Leffler series.
pub const ML_RADIUS: f64 = 30.0;

/// E_ν(z) = Σ z^k / Γ(νk + 1), for ν ∈ (0, 2].
pub fn mittag_leffler(nu: f64, z: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    if !(nu > 0.0 && nu <= 2.0) {
        return Err(Error::Domain(format!("Mittag-Leffler order {nu} outside (0, 2]")));
    }
    if z.norm() > ML_RADIUS {
        return Err(Error::Range(format!("|z| = {} exceeds {ML_RADIUS}", z.norm())));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let lz = z.ln();
    let (s, _) = sum_series(ctl, |k| {
        let (lg, _) = ln_gamma_sign(nu * k as f64 + 1.0).expect("positive argument");
        (lz * k as f64 - lg).exp()
    })?;
    Ok(s)
}

/// W_{α,β}(z) = Σ z^k / (k! Γ(αk + β)), α > −1.
pub fn wright(alpha: f64, beta: f64, z: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!("Wright parameter alpha = {alpha} must exceed -1")));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(rgamma_real(beta), 0.0));
    }
    let lz = z.ln();
    let (s, _) = sum_series(ctl, |k| wright_term(alpha, beta, lz, k))?;
    Ok(s)
}

fn wright_term(alpha: f64, beta: f64, lz: Complex64, k: usize) -> Complex64 {
    let kf = k as f64;
    match ln_gamma_sign(alpha * kf + beta) {
        Err(_) => Complex64::new(0.0, 0.0),
        Ok((lg, sign)) => {
            let (lk, _) = ln_gamma_sign(kf + 1.0).expect("positive argument");
            (lz * kf - lk - lg).exp() * sign
        }
    }
}

/// Modified Bessel function I_ν(z) by its ascending series.
pub fn bessel_i(nu: f64, z: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(if nu == 0.0 { 1.0 } else { 0.0 }, 0.0));
    }
    let lh = (z * 0.5).ln();
    let (s, _) = sum_series(ctl, |k| {
        let kf = k as f64;
        match ln_gamma_sign(kf + nu + 1.0) {
            Err(_) => Complex64::new(0.0, 0.0),
            Ok((lg, sign)) => {
                let (lk, _) = ln_gamma_sign(kf + 1.0).expect("positive argument");
                (lh * (2.0 * kf + nu) - lk - lg).exp() * sign
            }
        }
    })?;
    Ok(s)
}

const MWRIGHT_SERIES_MAX: f64 = 1.0;

/// M-Wright density M_ν(z) = W_{−ν,1−ν}(−z) for z ≥ 0, ν ∈ (0, 1).
///
/// Small arguments use the series; larger ones a Zolotarev-type integral
/// over (0, π) with positive integrand, which keeps relative accuracy in
/// the far tail.
pub fn mwright(nu: f64, z: f64) -> Result<f64> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::Domain(format!("M-Wright order {nu} outside (0, 1)")));
    }
    if !(z >= 0.0) {
        return Err(Error::Domain(format!("M-Wright argument {z} must be non-negative")));
    }
    if z <= MWRIGHT_SERIES_MAX {
        let w = wright(-nu, 1.0 - nu, Complex64::new(-z, 0.0), &SeriesControl::default())?;
        return Ok(w.re);
    }
    let q = 1.0 / (1.0 - nu);
    let zq = z.powf(q);
    let a = |phi: f64| {
        let snp = (nu * phi).sin();
        (snp / phi.sin()).powf(q) * ((1.0 - nu) * phi).sin() / snp
    };
    // A increases from its φ→0 limit to +∞ at φ = π; panels cover the
    // region where exp(−z^q A) is not negligible
    let lead = z.powf(nu * q) / (PI * (1.0 - nu));
    let integrand = |phi: f64| {
        let av = a(phi);
        let e = zq * av;
        if e > 745.0 {
            0.0
        } else {
            av * (-e).exp()
        }
    };
    let v: f64 = composite(integrand, 0.0, PI, 64);
    Ok(lead * v)
}

/// M-Wright function M_ν(z) = W_{−ν,1−ν}(−z) for complex z with
/// |arg z| < (1 − ν)π/2, from the Hankel integral
/// (1/2πi)∫ e^{σ − zσ^ν} σ^{ν−1} dσ on two rays at angle ±θ, θ ∈ (π/2, π].
pub fn mwright_complex(nu: f64, z: Complex64) -> Result<Complex64> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::Domain(format!("M-Wright order {nu} outside (0, 1)")));
    }
    let arg = z.arg().abs();
    let theta_max = if z.norm() == 0.0 { PI } else { ((0.5 * PI - arg) / nu).min(PI) };
    if !(theta_max > 0.5 * PI) || !z.norm().is_finite() {
        return Err(Error::Domain(format!("M-Wright argument {z} outside |arg z| < {}", 0.5 * PI * (1.0 - nu))));
    }
    let theta = 0.5 * (0.5 * PI + theta_max);
    let c = theta.cos();
    // u = r^ν; the ray factor e^{u^{1/ν} cos θ} is below e^{−42} past `reach`
    let reach = (42.0 / -c).powf(nu);
    let up = Complex64::from_polar(1.0, theta);
    let tilt = Complex64::from_polar(1.0, nu * theta);
    let f = |u: f64| {
        let r = u.powf(1.0 / nu);
        let a = tilt * (up * r - z * tilt * u).exp();
        let b = tilt.conj() * (up.conj() * r - z * tilt.conj() * u).exp();
        a - b
    };
    let v = crate::quad::integrate_adaptive_complex(f, 0.0, reach, 1e-15)?.value;
    Ok(v / (Complex64::new(0.0, 2.0 * PI * nu)))
}
