//! Integer-order rod solutions: free and drifted Fresnel kernels, half-line
//! boundary problems, the finite rod by images, and survival measures.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::error::{check_time, Error, Result};
use crate::kernel::{Envelope, SignedKernel};
use crate::quad::gk::composite;
use crate::quad::{integrate_oscillatory, phase_points, Amplitude};
use crate::specfun::fresnel_phase_integral;

/// Boundary behaviour at x = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryKind {
    Absorbing,
    Reflecting,
    /// u_x − αu = 0 at the origin, α > 0.
    Elastic(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geometry {
    HalfLine,
    /// Rod on [0, L].
    Finite(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySpec {
    pub kind: BoundaryKind,
    pub y: f64,
    pub geometry: Geometry,
}

impl BoundarySpec {
    pub fn new(kind: BoundaryKind, y: f64, geometry: Geometry) -> Result<Self> {
        if !(y > 0.0 && y.is_finite()) {
            return Err(Error::Domain(format!("start point y must be positive, got {y}")));
        }
        if let BoundaryKind::Elastic(alpha) = kind {
            if !(alpha > 0.0 && alpha.is_finite()) {
                return Err(Error::Domain(format!("elastic coefficient must be positive, got {alpha}")));
            }
        }
        if let Geometry::Finite(l) = geometry {
            if !(l > 0.0 && l.is_finite()) {
                return Err(Error::Domain(format!("rod length must be positive, got {l}")));
            }
            if kind != BoundaryKind::Reflecting {
                return Err(Error::Domain("finite rods support only reflecting ends".into()));
            }
            if y > l {
                return Err(Error::Domain(format!("start point {y} outside [0, {l}]")));
            }
        }
        Ok(Self { kind, y, geometry })
    }

    pub fn half_line(kind: BoundaryKind, y: f64) -> Result<Self> {
        Self::new(kind, y, Geometry::HalfLine)
    }

    pub fn finite(y: f64, length: f64) -> Result<Self> {
        Self::new(BoundaryKind::Reflecting, y, Geometry::Finite(length))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftSpec {
    pub mu_drift: f64,
}

impl DriftSpec {
    pub fn new(mu_drift: f64) -> Result<Self> {
        if !mu_drift.is_finite() {
            return Err(Error::Domain(format!("drift must be finite, got {mu_drift}")));
        }
        Ok(Self { mu_drift })
    }
}

fn chirp(x: f64, t: f64) -> f64 {
    (x * x / (2.0 * t) - FRAC_PI_4).cos() / (2.0 * PI * t).sqrt()
}

/// Fresnel function cos(x²/2t − π/4)/√(2πt).
pub fn fresnel_kernel(x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    Ok(chirp(x, t))
}

/// e^{μx} cos(x²/2t − μ²t/2 − π/4)/√(2πt).
pub fn fresnel_kernel_drift(x: f64, t: f64, d: DriftSpec) -> Result<f64> {
    check_time(t)?;
    let mu = d.mu_drift;
    Ok((mu * x).exp() * (x * x / (2.0 * t) - mu * mu * t / 2.0 - FRAC_PI_4).cos() / (2.0 * PI * t).sqrt())
}

/// Points α_k √t = √(2π)√(3/2 + k)·√t of the root-area remark.
pub fn root_point(k: usize, t: f64) -> f64 {
    (2.0 * PI * t * (1.5 + k as f64)).sqrt()
}

/// Actual positive zeros of the Fresnel function, √(2πt(3/4 + k)).
pub fn kernel_zero(k: usize, t: f64) -> f64 {
    phase_points(t, 2 * k)
}

const ELASTIC_TOL: f64 = 1e-13;
const OSC_PANEL_BUDGET: f64 = 4000.0;
const RAY_PANELS: usize = 16;

// ∫_s^∞ amp(w) e^{−α(w−s)} e^{i(w²/2t − φ)} dw along w = s + r e^{iπ/4}.
fn ray_integral(s: f64, t: f64, alpha: f64, phase: f64, weighted: bool) -> Complex64 {
    let rot = Complex64::from_polar(1.0, FRAC_PI_4);
    let c = (s / t + alpha) / 2f64.sqrt();
    // r²/2t + c r = 40
    let reach = t * (-c + (c * c + 80.0 / t).sqrt());
    let base = Complex64::from_polar(1.0, s * s / (2.0 * t) - phase);
    let f = |r: f64| {
        let rho = rot * r;
        let e = (Complex64::i() * s * rho / t - r * r / (2.0 * t) - alpha * rho).exp();
        if weighted {
            e * (s + rho)
        } else {
            e
        }
    };
    let v: Complex64 = composite(f, 0.0, reach, RAY_PANELS);
    base * rot * v
}

// ∫_s^∞ e^{−α(w−s)} cos(w²/2t − π/4) dw
fn elastic_tail(s: f64, t: f64, alpha: f64) -> Result<f64> {
    let reach = ((1.0 / ELASTIC_TOL).ln() + 5.0) / alpha;
    let panels = ((s + reach).powi(2) - s * s) / (2.0 * PI * t);
    if panels <= OSC_PANEL_BUDGET {
        let amp = |w: f64| (-alpha * (w - s)).exp();
        let r = integrate_oscillatory(Amplitude::Decaying { f: &amp, rate: alpha }, t, s, f64::INFINITY, ELASTIC_TOL)?;
        Ok(r.value)
    } else {
        Ok(ray_integral(s, t, alpha, FRAC_PI_4, false).re)
    }
}

fn elastic_first_form(x: f64, y: f64, t: f64, alpha: f64) -> f64 {
    let s = x + y;
    let tail = ray_integral(s, t, alpha, 0.75 * PI, true).re;
    chirp(x - y, t) - chirp(s, t) + 2.0 * tail / (2.0 * PI * t.powi(3)).sqrt()
}

/// Half-line solution with the boundary condition of `b` at x = 0.
pub fn halfline_solution(x: f64, t: f64, b: BoundarySpec) -> Result<f64> {
    check_time(t)?;
    if b.geometry != Geometry::HalfLine {
        return Err(Error::Domain("halfline_solution needs half-line geometry".into()));
    }
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("x must be non-negative, got {x}")));
    }
    if !(b.y > 0.0) {
        return Err(Error::Domain(format!("start point y must be positive, got {}", b.y)));
    }
    halfline_formula(x, t, b)
}

// The image formulas without the x ≥ 0 guard, for one-sided-free stencils at
// the boundary; requires x + y > 0 in the elastic case.
pub(crate) fn halfline_formula(x: f64, t: f64, b: BoundarySpec) -> Result<f64> {
    let y = b.y;
    match b.kind {
        BoundaryKind::Absorbing => Ok(chirp(x - y, t) - chirp(x + y, t)),
        BoundaryKind::Reflecting => Ok(chirp(x - y, t) + chirp(x + y, t)),
        BoundaryKind::Elastic(alpha) => {
            let tail = elastic_tail(x + y, t, alpha)?;
            let u = chirp(x - y, t) + chirp(x + y, t) - 2.0 * alpha * tail / (2.0 * PI * t).sqrt();
            debug_assert!(
                (u - elastic_first_form(x, y, t, alpha)).abs() <= 1e-9 * u.abs().max(1.0),
                "elastic forms disagree at x={x}, y={y}, t={t}, alpha={alpha}"
            );
            Ok(u)
        }
    }
}

/// Both elastic representations, (sum-of-images form, difference-of-images form).
pub fn elastic_forms(x: f64, t: f64, y: f64, alpha: f64) -> Result<(f64, f64)> {
    let b = BoundarySpec::half_line(BoundaryKind::Elastic(alpha), y)?;
    let main = halfline_solution(x, t, b)?;
    Ok((main, elastic_first_form(x, y, t, alpha)))
}

/// Truncated image sum with a convergence indicator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageSum {
    pub value: f64,
    /// |S_K − S_{K−1}|.
    pub last_increment: f64,
    pub converged: bool,
}

const IMAGE_CONVERGENCE: f64 = 1e-8;

/// Finite rod on [0, L] with reflecting ends, image sum over k ∈ [−K, K].
pub fn finite_rod_solution(x: f64, t: f64, b: BoundarySpec, k_max: usize) -> Result<ImageSum> {
    check_time(t)?;
    let Geometry::Finite(l) = b.geometry else {
        return Err(Error::Domain("finite_rod_solution needs finite geometry".into()));
    };
    let (d, s) = (x - b.y, x + b.y);
    // each bracket is invariant under x ↔ y, so the sum is symmetric bit for bit
    let mut sum = chirp(d, t) + chirp(s, t);
    let mut increment = sum;
    for k in 1..=k_max {
        let shift = 2.0 * k as f64 * l;
        increment = (chirp(d + shift, t) + chirp(d - shift, t)) + (chirp(s + shift, t) + chirp(s - shift, t));
        sum += increment;
    }
    let last_increment = increment.abs();
    Ok(ImageSum {
        value: sum,
        last_increment,
        converged: k_max > 0 && last_increment <= IMAGE_CONVERGENCE * sum.abs().max(1.0),
    })
}

/// ∫_0^∞ of the half-line solution in x.
pub fn survival_measure(y: f64, t: f64, b: BoundarySpec) -> Result<f64> {
    check_time(t)?;
    if b.geometry != Geometry::HalfLine {
        return Err(Error::Domain("survival_measure needs half-line geometry".into()));
    }
    if !(y > 0.0) {
        return Err(Error::Domain(format!("start point y must be positive, got {y}")));
    }
    let norm = (2.0 * PI * t).sqrt();
    match b.kind {
        BoundaryKind::Reflecting => Ok(1.0),
        BoundaryKind::Absorbing => Ok(fresnel_phase_integral(-y, y, t) / norm),
        BoundaryKind::Elastic(alpha) => {
            // Fubini in (x, w), then one integration by parts in w.
            let tail = fresnel_phase_integral(y, f64::INFINITY, t);
            Ok(1.0 - 2.0 * (tail - elastic_tail(y, t, alpha)?) / norm)
        }
    }
}

/// Free Fresnel kernel as a [`SignedKernel`].
pub fn free_kernel() -> SignedKernel {
    SignedKernel::new("fresnel", Some(Envelope::OscillatoryUnit), fresnel_kernel)
}

pub fn drift_kernel(d: DriftSpec) -> SignedKernel {
    let env = (d.mu_drift == 0.0).then_some(Envelope::OscillatoryUnit);
    SignedKernel::new("fresnel-drift", env, move |x, t| fresnel_kernel_drift(x, t, d)).with_param("mu_drift", d.mu_drift)
}

fn boundary_params(k: SignedKernel, b: &BoundarySpec) -> SignedKernel {
    let k = k.with_param("y", b.y);
    match b.kind {
        BoundaryKind::Elastic(alpha) => k.with_param("alpha", alpha),
        _ => k,
    }
}

pub fn halfline_kernel(b: BoundarySpec) -> Result<SignedKernel> {
    if b.geometry != Geometry::HalfLine {
        return Err(Error::Domain("halfline_kernel needs half-line geometry".into()));
    }
    let name = match b.kind {
        BoundaryKind::Absorbing => "halfline-absorbing",
        BoundaryKind::Reflecting => "halfline-reflecting",
        BoundaryKind::Elastic(_) => "halfline-elastic",
    };
    let k = SignedKernel::new(name, None, move |x, t| halfline_solution(x, t, b)).on_half_line();
    Ok(boundary_params(k, &b))
}

pub fn finite_rod_kernel(b: BoundarySpec, k_max: usize) -> Result<SignedKernel> {
    let Geometry::Finite(l) = b.geometry else {
        return Err(Error::Domain("finite_rod_kernel needs finite geometry".into()));
    };
    let k = SignedKernel::new("finite-rod", None, move |x, t| finite_rod_solution(x, t, b, k_max).map(|s| s.value))
        .on_half_line()
        .with_param("L", l)
        .with_param("K", k_max as f64);
    Ok(boundary_params(k, &b))
}
