//! The Fresnel pseudo-process: n-point signed densities, cylinder-set
//! measures, marginals, the non-Markov witness, superposition of waves and
//! Feynman–Kac functionals.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{check_time, Error, Result};
use crate::quad::{integrate_panels, phase_points, phase_split};
use crate::specfun::{fresnel_phase_integral, fresnel_phase_integral_sin};

pub const MAX_CYLINDER_DIM: usize = 4;
pub const MAX_TROTTER_STEPS: usize = 3;
/// Infinite outer intervals are cut at ±BOX_SCALE·√(max t).
pub const BOX_SCALE: f64 = 30.0;
const MARGINAL_CORE_INDEX: usize = 16;

fn check_times(times: &[f64]) -> Result<()> {
    if times.is_empty() {
        return Err(Error::Empty);
    }
    let mut prev = 0.0;
    for &t in times {
        check_time(t)?;
        if !(t > prev) {
            return Err(Error::Domain(format!("times must increase strictly, got {t} after {prev}")));
        }
        prev = t;
    }
    Ok(())
}

fn increments(times: &[f64]) -> Vec<f64> {
    let mut prev = 0.0;
    times
        .iter()
        .map(|&t| {
            let d = t - prev;
            prev = t;
            d
        })
        .collect()
}

fn prefactor(deltas: &[f64]) -> f64 {
    deltas.iter().map(|d| (2.0 * PI * d).sqrt().recip()).product()
}

/// Times 0 < t₁ < … < tₙ and positions x₁..xₙ; t₀ = 0, x₀ = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct PathGrid {
    pub times: Vec<f64>,
    pub coords: Vec<f64>,
}

impl PathGrid {
    pub fn new(times: Vec<f64>, coords: Vec<f64>) -> Result<Self> {
        check_times(&times)?;
        if coords.len() != times.len() {
            return Err(Error::Domain(format!("{} times but {} coordinates", times.len(), coords.len())));
        }
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("coordinates must be finite".into()));
        }
        Ok(Self { times, coords })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// The grid without its last point.
    pub fn truncated(&self) -> Result<Self> {
        let n = self.len();
        Self::new(self.times[..n - 1].to_vec(), self.coords[..n - 1].to_vec())
    }
}

/// Times and intervals [a_j, b_j]; endpoints may be infinite.
#[derive(Debug, Clone, PartialEq)]
pub struct CylinderSet {
    pub times: Vec<f64>,
    pub intervals: Vec<(f64, f64)>,
}

impl CylinderSet {
    pub fn new(times: Vec<f64>, intervals: Vec<(f64, f64)>) -> Result<Self> {
        check_times(&times)?;
        if intervals.len() != times.len() {
            return Err(Error::Domain(format!("{} times but {} intervals", times.len(), intervals.len())));
        }
        for &(a, b) in &intervals {
            if a.is_nan() || b.is_nan() || a > b || a == f64::INFINITY || b == f64::NEG_INFINITY {
                return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
            }
        }
        Ok(Self { times, intervals })
    }
}

fn phase_sum(times: &[f64], coords: &[f64]) -> f64 {
    let mut prev = (0.0, 0.0);
    let mut s = 0.0;
    for (&t, &x) in times.iter().zip(coords) {
        let (dt, dx) = (t - prev.0, x - prev.1);
        s += dx * dx / (2.0 * dt);
        prev = (t, x);
    }
    s
}

/// (2π)^{−n/2} Π(t_j − t_{j−1})^{−1/2} cos(Σ(x_j − x_{j−1})²/2(t_j − t_{j−1}) − nπ/4).
pub fn npoint_density(g: &PathGrid) -> f64 {
    let n = g.len() as f64;
    prefactor(&increments(&g.times)) * (phase_sum(&g.times, &g.coords) - n * FRAC_PI_4).cos()
}

/// ∫_a^b cos(φ + (x − c)²/2Δ − π/4) dx in closed form; a, b may be infinite.
fn chirp_closed(phi: f64, c: f64, delta: f64, a: f64, b: f64) -> f64 {
    let (lo, hi) = (a - c, b - c);
    phi.cos() * fresnel_phase_integral(lo, hi, delta) - phi.sin() * fresnel_phase_integral_sin(lo, hi, delta)
}

/// ∫_ℝ npoint_density dxₙ by quadrature on a core window around x_{n−1}
/// with Fresnel tails; equals the (n−1)-point density.
pub fn marginal_last(g: &PathGrid, tol: f64) -> Result<f64> {
    let n = g.len();
    if n < 2 {
        return Err(Error::Domain("marginalizing needs at least two points".into()));
    }
    let deltas = increments(&g.times);
    let delta = deltas[n - 1];
    let phi = phase_sum(&g.times[..n - 1], &g.coords[..n - 1]) - (n - 1) as f64 * FRAC_PI_4;
    let x = phase_points(delta, MARGINAL_CORE_INDEX).max(8.0 * delta.sqrt());
    let pts = phase_split(delta, -x, x);
    let core = integrate_panels(
        &mut |w: f64| (phi + w * w / (2.0 * delta) - FRAC_PI_4).cos(),
        &pts,
        tol,
    )?
    .value;
    let tails = 2.0 * (phi.cos() * fresnel_phase_integral(x, f64::INFINITY, delta)
        - phi.sin() * fresnel_phase_integral_sin(x, f64::INFINITY, delta));
    Ok(prefactor(&deltas) * (core + tails))
}

fn outer_bounds(a: f64, b: f64, cut: f64) -> (f64, f64) {
    (a.max(-cut), b.min(cut))
}

/// Panels for coordinate x_k: phase points of the local quadratic, centred
/// at the previous coordinate.
fn coordinate_panels(centre: f64, t_eff: f64, lo: f64, hi: f64) -> Vec<f64> {
    phase_split(t_eff, lo - centre, hi - centre).into_iter().map(|w| w + centre).collect()
}

/// μ{∩ a_j ≤ F(t_j) ≤ b_j} by iterated quadrature; the innermost coordinate
/// is integrated in closed form, infinite outer endpoints are cut at
/// ±BOX_SCALE·√tₙ.
pub fn cylinder_measure(c: &CylinderSet, tol: f64) -> Result<f64> {
    let n = c.times.len();
    if n > MAX_CYLINDER_DIM {
        return Err(Error::DimensionGuard { got: n, max: MAX_CYLINDER_DIM });
    }
    let deltas = increments(&c.times);
    let cut = BOX_SCALE * c.times[n - 1].sqrt();
    let raw = cylinder_level(c, &deltas, 0, 0.0, 0.0, cut, tol)?;
    Ok(prefactor(&deltas) * raw)
}

fn cylinder_level(c: &CylinderSet, deltas: &[f64], k: usize, prev: f64, phase: f64, cut: f64, tol: f64) -> Result<f64> {
    let n = deltas.len();
    let (a, b) = c.intervals[k];
    if k == n - 1 {
        let phi = phase - (n - 1) as f64 * FRAC_PI_4;
        return Ok(chirp_closed(phi, prev, deltas[k], a, b));
    }
    let (lo, hi) = outer_bounds(a, b, cut);
    if !(hi > lo) {
        return Ok(0.0);
    }
    let t_eff = 1.0 / (1.0 / deltas[k] + 1.0 / deltas[k + 1]);
    let pts = coordinate_panels(prev, t_eff, lo, hi);
    let mut failure = None;
    let r = integrate_panels(
        &mut |x: f64| {
            let dx = x - prev;
            match cylinder_level(c, deltas, k + 1, x, phase + dx * dx / (2.0 * deltas[k]), cut, tol) {
                Ok(v) => v,
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            }
        },
        &pts,
        tol,
    )?;
    match failure {
        Some(e) => Err(e),
        None => Ok(r.value),
    }
}

/// ∬ two-point density over the plane: closed-form inner integral, outer
/// quadrature on a core window and the one-point Fresnel tails beyond it.
pub fn plane_mass(t1: f64, t2: f64, tol: f64) -> Result<f64> {
    let x = phase_points(t1, MARGINAL_CORE_INDEX).max(8.0 * t1.sqrt());
    let core = CylinderSet::new(vec![t1, t2], vec![(-x, x), (f64::NEG_INFINITY, f64::INFINITY)])?;
    let inner = cylinder_measure(&core, tol)?;
    let tails = 2.0 * fresnel_phase_integral(x, f64::INFINITY, t1) / (2.0 * PI * t1).sqrt();
    Ok(inner + tails)
}

fn check_markov_times(t1: f64, t2: f64, t3: f64) -> Result<()> {
    check_times(&[t1, t2, t3])
}

fn markov_denominator(t2: f64, x2: f64) -> Result<f64> {
    let den = (x2 * x2 / (2.0 * t2) - FRAC_PI_4).cos();
    if den.abs() < 1e-6 {
        return Err(Error::NearZeroDenominator(den));
    }
    Ok(den)
}

/// (μ{F(t₁)∈dx₁, F(t₃)∈dx₃ | F(t₂)=x₂}, μ{F(t₁)∈dx₁ | F(t₂)=x₂}·μ{F(t₃)∈dx₃ | F(t₂)=x₂})
/// as ratios of the n-point densities; no equality is implied.
pub fn markov_gap(t1: f64, t2: f64, t3: f64, x1: f64, x2: f64, x3: f64) -> Result<(f64, f64)> {
    check_markov_times(t1, t2, t3)?;
    markov_denominator(t2, x2)?;
    let p = |times: Vec<f64>, coords: Vec<f64>| PathGrid::new(times, coords).map(|g| npoint_density(&g));
    let at2 = p(vec![t2], vec![x2])?;
    let joint = p(vec![t1, t2, t3], vec![x1, x2, x3])?;
    let left = p(vec![t1, t2], vec![x1, x2])?;
    // (F(t₂), F(t₃)) has the two-point law at times t₂ < t₃
    let right = p(vec![t2, t3], vec![x2, x3])?;
    Ok((joint / at2, left * right / (at2 * at2)))
}

/// The two conditional expressions exactly as printed; the printed product
/// carries no 1/2π and so equals 2π times the second value of [`markov_gap`].
pub fn markov_gap_printed(t1: f64, t2: f64, t3: f64, x1: f64, x2: f64, x3: f64) -> Result<(f64, f64)> {
    check_markov_times(t1, t2, t3)?;
    let den = markov_denominator(t2, x2)?;
    let (d1, d2, d3) = (t1, t2 - t1, t3 - t2);
    let a = x1 * x1 / (2.0 * d1);
    let b = (x2 - x1) * (x2 - x1) / (2.0 * d2);
    let c = (x3 - x2) * (x3 - x2) / (2.0 * d3);
    let lhs = t2.sqrt() / (2.0 * PI) * (a + b + c - 3.0 * FRAC_PI_4).cos() / ((d1 * d2 * d3).sqrt() * den);
    let rhs = t2.sqrt() * (a + b - 2.0 * FRAC_PI_4).cos() * (x2 * x2 / (2.0 * t2) + c - 2.0 * FRAC_PI_4).cos()
        / ((t1 * d3 * d2).sqrt() * den * den);
    Ok((lhs, rhs))
}

/// A weighted cosine cos(multiplier·β²t/2) in a superposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Component {
    pub weight: f64,
    pub multiplier: u32,
}

/// cosⁿ(β²t/2) = Σ weight·cos(multiplier·β²t/2) + delta_weight.
pub fn superposition_expand(n: u32) -> Result<(Vec<Component>, f64)> {
    if n == 0 {
        return Err(Error::Domain("superposition needs n ≥ 1".into()));
    }
    let scale = 2f64.powi(1 - n as i32);
    let mut binom = 1.0;
    let mut comps = Vec::new();
    for k in 0..=n / 2 {
        if 2 * k == n {
            return Ok((comps, binom * scale / 2.0));
        }
        comps.push(Component {
            weight: binom * scale,
            multiplier: n - 2 * k,
        });
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    Ok((comps, 0.0))
}

/// u * u = ½δ(x) + regular: returns (½cos(x²/4t − π/4)/√(4πt), ½).
pub fn self_convolution(x: f64, t: f64) -> Result<(f64, f64)> {
    check_time(t)?;
    Ok((0.5 * (x * x / (4.0 * t) - FRAC_PI_4).cos() / (4.0 * PI * t).sqrt(), 0.5))
}

/// C^∞ step: 1 on [0, w], 0 beyond 2w.
fn smooth_window(w: f64, width: f64) -> f64 {
    let a = w.abs();
    if a <= width {
        return 1.0;
    }
    if a >= 2.0 * width {
        return 0.0;
    }
    let s = (a - width) / width;
    let psi = |u: f64| if u > 0.0 { (-1.0 / u).exp() } else { 0.0 };
    psi(1.0 - s) / (psi(s) + psi(1.0 - s))
}

/// ∫ u(w,t)u(x − w,t) dw with a smooth window of half-width `width` (unit
/// on [−width, width], vanishing beyond 2·width). For x ≠ 0 the delta part
/// averages out and the result tends to the regular part.
pub fn self_convolution_windowed(x: f64, t: f64, width: f64) -> Result<f64> {
    check_time(t)?;
    if !(width > 0.0 && width.is_finite()) {
        return Err(Error::Domain(format!("window width must be positive, got {width}")));
    }
    let u = |w: f64| (w * w / (2.0 * t) - FRAC_PI_4).cos() / (2.0 * PI * t).sqrt();
    let pts = coordinate_panels(x / 2.0, t / 2.0, -2.0 * width, 2.0 * width);
    let r = integrate_panels(&mut |w: f64| smooth_window(w, width) * u(w) * u(x - w), &pts, 1e-12)?;
    Ok(r.value)
}

/// Non-negative potential k(x) for Feynman–Kac functionals.
#[derive(Debug, Clone, PartialEq)]
pub enum Potential {
    Constant(f64),
    /// Piecewise-linear through (xs, ks), held constant outside.
    Tabulated { xs: Vec<f64>, ks: Vec<f64> },
}

impl Potential {
    pub fn constant(c: f64) -> Result<Self> {
        if !(c >= 0.0 && c.is_finite()) {
            return Err(Error::Domain(format!("potential must be non-negative, got {c}")));
        }
        Ok(Self::Constant(c))
    }

    pub fn tabulated(xs: Vec<f64>, ks: Vec<f64>) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::Empty);
        }
        if xs.len() != ks.len() || xs.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Domain("tabulated potential needs increasing nodes and matching values".into()));
        }
        if ks.iter().any(|k| !(*k >= 0.0 && k.is_finite())) {
            return Err(Error::Domain("potential must be non-negative on its grid".into()));
        }
        Ok(Self::Tabulated { xs, ks })
    }

    pub fn at(&self, x: f64) -> f64 {
        match self {
            Self::Constant(c) => *c,
            Self::Tabulated { xs, ks } => {
                let n = xs.len();
                if x <= xs[0] {
                    return ks[0];
                }
                if x >= xs[n - 1] {
                    return ks[n - 1];
                }
                let i = xs.partition_point(|v| *v <= x) - 1;
                let s = (x - xs[i]) / (xs[i + 1] - xs[i]);
                ks[i] + s * (ks[i + 1] - ks[i])
            }
        }
    }
}

/// ∫…∫ exp(−Σk(x_j)Δt)·μ{F(t_j) ∈ dx_j} over [x − box, x + box]ⁿ with
/// t_j = jt/n and the pseudo-process started at x.
pub fn feynman_kac_trotter(p: &Potential, x: f64, t: f64, n: usize, half_width: f64) -> Result<f64> {
    check_time(t)?;
    if n == 0 {
        return Err(Error::Domain("Trotter product needs n ≥ 1".into()));
    }
    if n > MAX_TROTTER_STEPS {
        return Err(Error::DimensionGuard { got: n, max: MAX_TROTTER_STEPS });
    }
    if !(half_width > 0.0 && half_width.is_finite()) {
        return Err(Error::Domain(format!("box half-width must be positive, got {half_width}")));
    }
    let dt = t / n as f64;
    let raw = trotter_level(p, n, dt, x, half_width, 0, x, 0.0)?;
    Ok(raw * prefactor(&vec![dt; n]))
}

#[allow(clippy::too_many_arguments)]
fn trotter_level(p: &Potential, n: usize, dt: f64, start: f64, half: f64, k: usize, prev: f64, phase: f64) -> Result<f64> {
    let (lo, hi) = (start - half, start + half);
    let t_eff = if k == n - 1 { dt } else { dt / 2.0 };
    let mut pts = coordinate_panels(prev, t_eff, lo, hi);
    if let Potential::Tabulated { xs, .. } = p {
        pts.extend(xs.iter().copied().filter(|x| *x > lo && *x < hi));
        pts.sort_by(f64::total_cmp);
        pts.dedup();
    }
    let mut failure = None;
    let r = integrate_panels(
        &mut |y: f64| {
            let dy = y - prev;
            let ph = phase + dy * dy / (2.0 * dt);
            let damp = (-p.at(y) * dt).exp();
            if k == n - 1 {
                damp * (ph - n as f64 * FRAC_PI_4).cos()
            } else {
                match trotter_level(p, n, dt, start, half, k + 1, y, ph) {
                    Ok(v) => damp * v,
                    Err(e) => {
                        failure.get_or_insert(e);
                        0.0
                    }
                }
            }
        },
        &pts,
        1e-10,
    )?;
    match failure {
        Some(e) => Err(e),
        None => Ok(r.value),
    }
}

/// ½[ŵ(x, it) + ŵ(x, −it)] with ŵ = e^{−ct}: cos(ct).
pub fn feynman_kac_halfsum(c: f64, x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    if !(c >= 0.0 && c.is_finite() && x.is_finite()) {
        return Err(Error::Domain(format!("need c ≥ 0 and finite x, got c = {c}, x = {x}")));
    }
    Ok((c * t).cos())
}

/// Residuals of w = cos(ct) for constant k = c in the fourth-order
/// Feynman–Kac equation: (w_tt − [−¼w'''' + ½(kw)'' + ½kw'' − k²w],
/// w_tt + ½[w'''' − (kw)'' − kw'' − k²w]); the first form vanishes.
pub fn kac_residuals(c: f64, t: f64) -> Result<(f64, f64)> {
    let w = feynman_kac_halfsum(c, 0.0, t)?;
    let wtt = -c * c * w;
    // w has no x dependence, so every spatial derivative is zero
    let corrected = wtt - (-c * c * w);
    let printed = wtt + 0.5 * (-c * c * w);
    Ok((corrected, printed))
}
