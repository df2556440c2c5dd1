//! Time-fractional rod equation of order 2ν: the series solution, its
//! transforms, the Airy/Bernstein special cases and the subordination
//! representation through fractional diffusion.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{check_time, Error, Result};
use crate::kernel::{Envelope, SignedKernel};
use crate::quad::{integrate_adaptive, integrate_panels};
use crate::rod::fresnel_kernel;
use crate::specfun::{
    airy_ai, airy_ai_real, gamma_real, ln_gamma_sign, mittag_leffler, mwright, mwright_complex, CompensatedSum,
    SeriesControl,
};

/// Order ν ∈ (0, 1] of the time-fractional rod equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracOrder {
    pub nu: f64,
    /// The condition u_t(x, 0) = 0 is imposed only for ν > 1/2.
    pub second_ic_applies: bool,
}

impl FracOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !(nu > 0.0 && nu <= 1.0) {
            return Err(Error::Domain(format!("fractional order {nu} outside (0, 1]")));
        }
        Ok(Self {
            nu,
            second_ic_applies: nu > 0.5,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diffusivity {
    pub lam: f64,
}

impl Diffusivity {
    pub fn new(lam: f64) -> Result<Self> {
        if !(lam > 0.0 && lam.is_finite()) {
            return Err(Error::Domain(format!("diffusivity {lam} must be positive")));
        }
        Ok(Self { lam })
    }
}

impl Default for Diffusivity {
    fn default() -> Self {
        Self { lam: 1.0 }
    }
}

/// Largest |x|/t^{ν/2} accepted by the series evaluators.
pub const SERIES_REACH: f64 = 8.0;
const SERIES_LOSS: f64 = 1e-9;

fn reach_check(z: f64) -> Result<()> {
    if z > SERIES_REACH {
        return Err(Error::Range(format!(
            "scaled distance {z} beyond the series reach {SERIES_REACH}"
        )));
    }
    Ok(())
}

/// u_{2ν}(x, t) by its power series in |x|/t^{ν/2}.
pub fn u2nu_series(x: f64, t: f64, o: FracOrder, ctl: SeriesControl) -> Result<f64> {
    check_time(t)?;
    let nu = o.nu;
    let tn = t.powf(nu);
    let z = x.abs() / tn.sqrt();
    reach_check(z)?;
    let lz = (SQRT_2 * z).ln();
    let mut acc = CompensatedSum::default();
    let mut biggest = 0.0f64;
    let mut lnfact = 0.0;
    let mut small = 0;
    let mut done = false;
    for m in 0..ctl.max_terms {
        let mf = m as f64;
        if m > 0 {
            lnfact += mf.ln();
        }
        let (lg, sg) = ln_gamma_sign((mf + 1.0) * nu / 2.0)?;
        // magnitude without the trigonometric factors, which vanish on residue classes of m
        let envelope = if z == 0.0 {
            if m == 0 { lg.exp() } else { 0.0 }
        } else {
            (mf * lz - lnfact + lg).exp()
        };
        let trig = ((mf + 1.0) * FRAC_PI_4).cos() * ((mf + 1.0) * PI * nu / 2.0).sin();
        let sign = if m % 2 == 0 { sg } else { -sg };
        acc.add(Complex64::new(sign * envelope * trig, 0.0));
        biggest = biggest.max(envelope);
        if envelope <= ctl.rel_tol * acc.value().re.abs().max(1.0) {
            small += 1;
            if small == 2 {
                done = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    if !done {
        return Err(Error::BudgetExceeded(ctl.max_terms));
    }
    if biggest * f64::EPSILON > SERIES_LOSS {
        return Err(Error::Range(format!(
            "series cancellation at scaled distance {z} (largest term {biggest:e})"
        )));
    }
    Ok(acc.value().re / (PI * (2.0 * tn).sqrt()))
}

const SERIES_SWITCH: f64 = 3.0;

/// u_{2ν} on the whole line: the series near the origin, the Wright pair
/// Re[e^{iπ/4} M_{ν/2}(√2 z e^{iπ/4})]/√(2t^ν) on a Hankel contour beyond.
pub fn u2nu_eval(x: f64, t: f64, o: FracOrder) -> Result<f64> {
    check_time(t)?;
    if o.nu == 1.0 {
        return fresnel_kernel(x, t);
    }
    let tn = t.powf(o.nu);
    let z = x.abs() / tn.sqrt();
    if z <= SERIES_SWITCH {
        return u2nu_series(x, t, o, SeriesControl::default());
    }
    u2nu_wright_pair(x, t, o)
}

pub(crate) fn u2nu_wright_pair(x: f64, t: f64, o: FracOrder) -> Result<f64> {
    let tn = t.powf(o.nu);
    let z = x.abs() / tn.sqrt();
    let rot = Complex64::from_polar(1.0, FRAC_PI_4);
    let m = mwright_complex(o.nu / 2.0, rot * (SQRT_2 * z))?;
    Ok((rot * m).re / (2.0 * tn).sqrt())
}

/// ½[E_ν(iβ²t^ν/2) + E_ν(−iβ²t^ν/2)].
pub fn u2nu_fourier(beta: f64, t: f64, o: FracOrder) -> Result<f64> {
    check_time(t)?;
    let ctl = SeriesControl::default();
    let a = beta * beta * t.powf(o.nu) / 2.0;
    let plus = mittag_leffler(o.nu, Complex64::new(0.0, a), &ctl)?;
    let minus = mittag_leffler(o.nu, Complex64::new(0.0, -a), &ctl)?;
    let v = 0.5 * (plus + minus);
    if v.im.abs() > 1e-12 {
        return Err(Error::Range(format!("conjugate pair left imaginary part {:e}", v.im)));
    }
    Ok(v.re)
}

/// μ^{ν/2−1} e^{−|x|μ^{ν/2}} cos(|x|μ^{ν/2} − π/4)/√2.
pub fn u2nu_laplace_closed(x: f64, mu_l: f64, o: FracOrder) -> Result<f64> {
    if !(mu_l > 0.0) {
        return Err(Error::Domain(format!("Laplace variable {mu_l} must be positive")));
    }
    let m = mu_l.powf(o.nu / 2.0);
    let ax = x.abs();
    Ok(mu_l.powf(o.nu / 2.0 - 1.0) * (-ax * m).exp() * (ax * m - FRAC_PI_4).cos() / SQRT_2)
}

// (1/π)∫₀^∞ e^{−y⁴t/4} cos(xy) dy
fn bernstein_quadrature(x: f64, t: f64) -> Result<f64> {
    let top = (4.0 * 45.0 / t).powf(0.25);
    let turns = (x.abs() * top / PI).ceil().max(1.0) as usize;
    let pts: Vec<f64> = (0..=turns).map(|k| top * k as f64 / turns as f64).collect();
    let r = integrate_panels(&mut |y: f64| (-(y.powi(4)) * t / 4.0).exp() * (x * y).cos(), &pts, 1e-15)?;
    Ok(r.value / PI)
}

fn bernstein_series(x: f64, t: f64) -> Result<f64> {
    let s = t.powf(0.25);
    let q = x.abs() / (2.0 * s);
    reach_check(x.abs() / s)?;
    let ctl = SeriesControl::default();
    let mut acc = CompensatedSum::default();
    let mut small = 0;
    let lq = q.ln();
    let mut lnfact = 0.0;
    for k in 0..ctl.max_terms {
        let kf = k as f64;
        if k > 0 {
            lnfact += kf.ln();
        }
        let (lg, sg) = ln_gamma_sign(kf / 2.0 + 0.75)?;
        let mag = if q == 0.0 {
            if k == 0 { (-lg).exp() } else { 0.0 }
        } else {
            (2.0 * kf * lq - lnfact - lg).exp()
        };
        let sign = if k % 2 == 0 { sg } else { -sg };
        acc.add(Complex64::new(sign * mag, 0.0));
        if mag <= ctl.rel_tol * acc.value().re.abs().max(1.0) {
            small += 1;
            if small == 2 {
                return Ok(acc.value().re / (2.0 * s));
            }
        } else {
            small = 0;
        }
    }
    Err(Error::BudgetExceeded(ctl.max_terms))
}

/// (1/2π)∫ e^{−y⁴t/4} cos(xy) dy, returned from the Gamma series after a
/// cross-check against direct quadrature.
pub fn biquadratic_bernstein(x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    let series = bernstein_series(x, t)?;
    #[cfg(debug_assertions)]
    {
        let quad = bernstein_quadrature(x, t)?;
        debug_assert!(
            (series - quad).abs() <= 1e-9,
            "Bernstein series {series} and quadrature {quad} disagree at x={x}, t={t}"
        );
    }
    Ok(series)
}

/// Whole-line Bernstein kernel: series inside its reach, quadrature beyond.
pub fn bernstein_eval(x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    if x.abs() / t.powf(0.25) <= SERIES_REACH {
        biquadratic_bernstein(x, t)
    } else {
        bernstein_quadrature(x, t)
    }
}

/// u_{4/3} as an e^{±iπ/4}-weighted pair of Airy functions.
pub fn u_fourthirds_airy(x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    let c = (3.0 * t).cbrt();
    let rot = Complex64::from_polar(1.0, FRAC_PI_4);
    let arg = rot * (SQRT_2 * x.abs() / c);
    let pair = rot * airy_ai(arg)? + rot.conj() * airy_ai(arg.conj())?;
    if pair.im.abs() > 1e-12 * pair.re.abs().max(1.0) {
        return Err(Error::Range(format!("Airy pair left imaginary part {:e}", pair.im)));
    }
    Ok(3.0 / (2f64.powf(1.5) * c) * pair.re)
}

/// Fractional-diffusion density v_ν(x, t) = W_{−ν/2,1−ν/2}(−|x|/(λt^{ν/2}))/(2λt^{ν/2}).
pub fn fracdiff_wright(x: f64, t: f64, o: FracOrder, d: Diffusivity) -> Result<f64> {
    check_time(t)?;
    let s = d.lam * t.powf(o.nu / 2.0);
    Ok(mwright(o.nu / 2.0, x.abs() / s)? / (2.0 * s))
}

// folded density 2v_{2ν}(s, t) of the subordinating time, closed forms only
fn folded_time_density(nu: f64, t: f64, d: Diffusivity) -> Result<Box<dyn Fn(f64) -> f64>> {
    let lam = d.lam;
    if nu == 0.5 {
        let norm = 1.0 / (lam * (PI * t).sqrt());
        let w = 4.0 * lam * lam * t;
        Ok(Box::new(move |s: f64| norm * (-s * s / w).exp()))
    } else if (nu - 1.0 / 3.0).abs() < 1e-15 {
        let c = (3.0 * t).cbrt();
        let norm = 3.0 / (lam * c);
        Ok(Box::new(move |s: f64| norm * airy_ai_real(s / (lam * c)).unwrap_or(0.0)))
    } else {
        Err(Error::UnsupportedOrder(nu))
    }
}

/// ∫₀^∞ fresnel_kernel(x, s)·2v_{2ν}(s, t) ds for ν ∈ {1/3, 1/2}.
pub fn u_subordinate(x: f64, t: f64, o: FracOrder, d: Diffusivity) -> Result<f64> {
    check_time(t)?;
    let g = folded_time_density(o.nu, t, d)?;
    // width of the time density: v decays on the scale λt^ν
    fresnel_subordinated(x, g, d.lam * t.powf(o.nu))
}

/// ∫₀^∞ fresnel_kernel(x, s) g(s) ds for a weight g that is bounded near
/// s = 0 and integrable, with `scale` the width of g.
pub(crate) fn fresnel_subordinated(x: f64, g: impl Fn(f64) -> f64, scale: f64) -> Result<f64> {
    if x == 0.0 {
        // s = q²
        let top = (60.0 * scale).sqrt().max(1.0) * 3.0;
        let r = integrate_adaptive(|q: f64| 2.0 * FRAC_PI_4.cos() / (2.0 * PI).sqrt() * g(q * q), 0.0, top, 1e-14)?;
        return Ok(r.value);
    }
    // s = x²/(2w): ∫₀^∞ |x|/(2√π) w^{−3/2} cos(w − π/4) g(x²/2w) dw
    let ax = x.abs();
    let pref = ax / (2.0 * PI.sqrt());
    let h = |w: f64| {
        if w <= 0.0 {
            return 0.0;
        }
        pref * w.powf(-1.5) * (w - FRAC_PI_4).cos() * g(x * x / (2.0 * w))
    };
    let wc = x * x / (2.0 * scale);
    let first = 0.75 * PI;
    let mut pts = vec![0.0];
    let mut w = (wc / 64.0).min(first / 2.0);
    while w < first {
        pts.push(w);
        w *= 2.0;
    }
    pts.push(first);
    let head = integrate_panels(&mut |w: f64| h(w), &pts, 1e-14)?.value;
    // panels between consecutive zeros of cos(w − π/4), partial sums smoothed
    // by repeated averaging
    const LOBES: usize = 400;
    const KEEP: usize = 48;
    let mut sums = Vec::with_capacity(LOBES);
    let mut acc = head;
    for k in 0..LOBES {
        let a = first + k as f64 * PI;
        acc += integrate_adaptive(h, a, a + PI, 1e-15)?.value;
        sums.push(acc);
    }
    let mut level = sums[LOBES - KEEP..].to_vec();
    while level.len() > 1 {
        level = level.windows(2).map(|p| 0.5 * (p[0] + p[1])).collect();
    }
    Ok(level[0])
}

/// Decay rate r with |u_{2ν}(x, t)| ≲ e^{−r|x|} for t ≤ 1, from the
/// exponent of the Wright pair at large argument.
pub(crate) fn frac_decay_rate(nu: f64) -> f64 {
    let l = nu / 2.0;
    let p = 1.0 / (1.0 - l);
    (1.0 - l) * (l.powf(l) * SQRT_2).powf(p) * (p * FRAC_PI_4).cos()
}

pub fn frac_series_kernel(o: FracOrder) -> SignedKernel {
    let env = if o.nu == 1.0 {
        Envelope::OscillatoryUnit
    } else {
        Envelope::Exponential(frac_decay_rate(o.nu))
    };
    SignedKernel::new("frac-series", Some(env), move |x, t| u2nu_eval(x, t, o)).with_param("nu", o.nu)
}

pub fn frac_airy_kernel() -> SignedKernel {
    SignedKernel::new("frac-airy", Some(Envelope::Exponential(frac_decay_rate(2.0 / 3.0))), u_fourthirds_airy)
        .with_param("nu", 2.0 / 3.0)
}

pub fn bernstein_kernel() -> SignedKernel {
    SignedKernel::new("bernstein", Some(Envelope::Exponential(frac_decay_rate(0.5))), bernstein_eval)
}

pub fn fracdiff_kernel(o: FracOrder, d: Diffusivity) -> SignedKernel {
    SignedKernel::new("fracdiff-wright", Some(Envelope::Exponential(0.5 / d.lam)), move |x, t| {
        fracdiff_wright(x, t, o, d)
    })
    .with_param("nu", o.nu)
    .with_param("lambda", d.lam)
}

/// Γ-based value of u_{2ν}(0, t).
pub fn u2nu_origin(t: f64, o: FracOrder) -> Result<f64> {
    check_time(t)?;
    let tn = t.powf(o.nu);
    Ok(FRAC_PI_4.cos() * (PI * o.nu / 2.0).sin() * gamma_real(o.nu / 2.0)? / (PI * (2.0 * tn).sqrt()))
}
