//! Quadrature and transform engines: adaptive Gauss–Kronrod, oscillatory
//! integrals with quadratic phase, numeric Fourier/Laplace transforms and
//! central finite-difference stencils.

pub(crate) mod gk;

use std::f64::consts::PI;
use std::ops::{Add, Mul};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::{Envelope, SignedKernel, Support};
use crate::specfun::{fresnel_cs, fresnel_phase_integral, FRESNEL_LIMIT};
use gk::{gk21, Magnitude, PANEL_EVALS};

pub const DEFAULT_DEPTH: usize = 50;
const DEFAULT_EVAL_BUDGET: usize = 1 << 21;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<V = f64> {
    pub value: V,
    pub err_estimate: f64,
    pub evaluations: usize,
}

impl<V: Add<Output = V>> QuadResult<V> {
    fn merge(self, other: QuadResult<V>) -> QuadResult<V> {
        QuadResult {
            value: self.value + other.value,
            err_estimate: self.err_estimate + other.err_estimate,
            evaluations: self.evaluations + other.evaluations,
        }
    }
}

pub(crate) fn adaptive<V, F>(f: &mut F, a: f64, b: f64, tol: f64, depth_limit: usize) -> Result<QuadResult<V>>
where
    V: Copy + Default + Add<Output = V> + Mul<f64, Output = V> + Magnitude,
    F: FnMut(f64) -> V,
{
    adaptive_budget(f, a, b, tol, depth_limit, DEFAULT_EVAL_BUDGET)
}

pub(crate) fn adaptive_budget<V, F>(
    f: &mut F,
    a: f64,
    b: f64,
    tol: f64,
    depth_limit: usize,
    max_evals: usize,
) -> Result<QuadResult<V>>
where
    V: Copy + Default + Add<Output = V> + Mul<f64, Output = V> + Magnitude,
    F: FnMut(f64) -> V,
{
    let total = b - a;
    let mut value = V::default();
    let mut err = 0.0;
    let mut evals = 0;
    let mut stack = vec![(a, b, 0usize)];
    while let Some((lo, hi, depth)) = stack.pop() {
        let (k, g, kabs) = gk21(f, lo, hi);
        evals += PANEL_EVALS;
        let e = (k + g * -1.0).magnitude();
        let local = tol * (hi - lo) / total;
        let floor = 50.0 * f64::EPSILON * kabs;
        let tiny = (hi - lo) <= 1e-14 * lo.abs().max(hi.abs()).max(1e-300);
        if e <= local.max(floor) || tiny {
            value = value + k;
            err += e;
            continue;
        }
        if depth >= depth_limit || evals >= max_evals {
            return Err(Error::NonConvergence(depth_limit));
        }
        let mid = 0.5 * (lo + hi);
        stack.push((mid, hi, depth + 1));
        stack.push((lo, mid, depth + 1));
    }
    Ok(QuadResult {
        value,
        err_estimate: err,
        evaluations: evals,
    })
}

/// ∫_a^b f by bisection on 21-point Gauss–Kronrod panels.
pub fn integrate_adaptive<F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult>
where
    F: FnMut(f64) -> f64,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("need finite a < b, got [{a}, {b}]")));
    }
    adaptive(&mut f, a, b, tol, DEFAULT_DEPTH)
}

pub(crate) fn integrate_adaptive_complex<F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult<Complex64>>
where
    F: FnMut(f64) -> Complex64,
{
    adaptive(&mut f, a, b, tol, DEFAULT_DEPTH)
}

/// Adaptive integration over consecutive panels [p_i, p_{i+1}].
pub(crate) fn integrate_panels<V, F>(f: &mut F, points: &[f64], tol: f64) -> Result<QuadResult<V>>
where
    V: Copy + Default + Add<Output = V> + Mul<f64, Output = V> + Magnitude,
    F: FnMut(f64) -> V,
{
    let span = points.last().copied().unwrap_or(0.0) - points.first().copied().unwrap_or(0.0);
    let mut acc = QuadResult {
        value: V::default(),
        err_estimate: 0.0,
        evaluations: 0,
    };
    if span <= 0.0 {
        return Ok(acc);
    }
    for w in points.windows(2) {
        if w[1] > w[0] {
            let r = adaptive(f, w[0], w[1], tol * (w[1] - w[0]) / span, DEFAULT_DEPTH)?;
            acc = acc.merge(r);
        }
    }
    Ok(acc)
}

/// Zeros and extrema of cos(w²/2t − π/4) on w > 0: √(2t(π/2·k + 3π/4)).
pub fn phase_points(t: f64, k: usize) -> f64 {
    (2.0 * t * (0.5 * PI * k as f64 + 0.75 * PI)).sqrt()
}

/// Breakpoints for [a, b]: the endpoints, 0 if interior, and every ±w_k inside.
pub fn phase_split(t: f64, a: f64, b: f64) -> Vec<f64> {
    let mut pts = vec![a];
    let mut inner = Vec::new();
    let reach = a.abs().max(b.abs());
    let mut k = 0;
    loop {
        let w = phase_points(t, k);
        if w >= reach {
            break;
        }
        for s in [w, -w] {
            if s > a && s < b {
                inner.push(s);
            }
        }
        k += 1;
    }
    if a < 0.0 && b > 0.0 {
        inner.push(0.0);
    }
    inner.sort_by(f64::total_cmp);
    pts.extend(inner);
    pts.push(b);
    pts
}

/// Amplitude multiplying cos(w²/2t − π/4) in [`integrate_oscillatory`].
#[derive(Clone, Copy)]
pub enum Amplitude<'a> {
    /// amplitude ≡ 1; infinite tails are closed with Fresnel integrals.
    Unit,
    /// |f(w)| ≤ C e^{−rate |w|}; infinite tails are cut where the envelope is negligible.
    Decaying { f: &'a dyn Fn(f64) -> f64, rate: f64 },
    /// Any amplitude; only finite intervals.
    General(&'a dyn Fn(f64) -> f64),
}

impl Amplitude<'_> {
    fn at(&self, w: f64) -> f64 {
        match self {
            Amplitude::Unit => 1.0,
            Amplitude::Decaying { f, .. } | Amplitude::General(f) => f(w),
        }
    }
}

const UNIT_CORE_INDEX: usize = 16;

/// ∫_a^b amplitude(w)·cos(w²/2t − π/4) dw, split at the phase points.
pub fn integrate_oscillatory(amp: Amplitude<'_>, t: f64, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    crate::error::check_time(t)?;
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            err_estimate: 0.0,
            evaluations: 0,
        });
    }
    if a > b {
        let r = integrate_oscillatory(amp, t, b, a, tol)?;
        return Ok(QuadResult { value: -r.value, ..r });
    }
    let chirp = |w: f64| (w * w / (2.0 * t) - 0.25 * PI).cos();
    let (lo, hi, mut extra, mut extra_err) = match amp {
        Amplitude::Unit => {
            let w = phase_points(t, UNIT_CORE_INDEX);
            let lo = a.max(-w);
            let hi = b.min(w);
            let mut extra = 0.0;
            if a < lo {
                extra += fresnel_phase_integral(a, lo.min(b), t);
            }
            if b > hi {
                extra += fresnel_phase_integral(hi.max(a), b, t);
            }
            (lo, hi, extra, 0.0)
        }
        Amplitude::Decaying { f, rate } => {
            if !(rate > 0.0) {
                return Err(Error::UnsupportedTail);
            }
            let reach = ((1.0 / tol).ln().max(0.0) + 5.0) / rate;
            let hi = if b.is_finite() { b } else { a.max(0.0) + reach };
            let lo = if a.is_finite() { a } else { b.min(0.0) - reach };
            let mut bound = 0.0;
            if !b.is_finite() {
                bound += f(hi).abs() / rate;
            }
            if !a.is_finite() {
                bound += f(lo).abs() / rate;
            }
            (lo, hi, 0.0, bound)
        }
        Amplitude::General(_) => {
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::UnsupportedTail);
            }
            (a, b, 0.0, 0.0)
        }
    };
    let mut res = QuadResult {
        value: 0.0,
        err_estimate: 0.0,
        evaluations: 0,
    };
    if hi > lo {
        let pts = phase_split(t, lo, hi);
        res = integrate_panels(&mut |w: f64| amp.at(w) * chirp(w), &pts, tol)?;
    }
    extra += res.value;
    extra_err += res.err_estimate;
    Ok(QuadResult {
        value: extra,
        err_estimate: extra_err,
        evaluations: res.evaluations.max(1),
    })
}

// ∫_{v0}^∞ e^{i v²} dv
fn chirp_tail(v0: f64) -> Complex64 {
    let (c, s) = fresnel_cs(v0);
    Complex64::new(FRESNEL_LIMIT - c, FRESNEL_LIMIT - s)
}

// ∫_X^∞ e^{iβx} cos(x²/2t − π/4)/√(2πt) dx
fn fresnel_fourier_tail(beta: f64, t: f64, x: f64) -> Complex64 {
    let r = (2.0 * t).sqrt();
    let shift = Complex64::from_polar(1.0, -(beta * beta * t / 2.0 + 0.25 * PI));
    let plus = shift * chirp_tail((x + beta * t) / r);
    let minus = (shift * chirp_tail((x - beta * t) / r)).conj();
    (plus + minus) * (r / 2.0) / (2.0 * PI * t).sqrt()
}

/// ∫ e^{iβx} k(x, t) dx over the kernel's support.
pub fn fourier_numeric(kernel: &SignedKernel, beta: f64, t: f64, tol: f64) -> Result<Complex64> {
    crate::error::check_time(t)?;
    let env = kernel.envelope.ok_or(Error::EnvelopeMissing)?;
    let mut failure = None;
    let mut integrand = |x: f64| match kernel.eval(x, t) {
        Ok(v) => Complex64::from_polar(v, beta * x),
        Err(e) => {
            failure.get_or_insert(e);
            Complex64::new(0.0, 0.0)
        }
    };
    let half = kernel.support == Support::HalfLine;
    let (reach, tail) = match env {
        Envelope::OscillatoryUnit => {
            let x = phase_points(t, UNIT_CORE_INDEX).max(8.0 * t.sqrt());
            let mut tail = fresnel_fourier_tail(beta, t, x);
            if !half {
                tail += fresnel_fourier_tail(-beta, t, x);
            }
            (x, tail)
        }
        Envelope::Exponential(rate) => {
            if !(rate > 0.0) {
                return Err(Error::Domain(format!("envelope rate {rate} must be positive")));
            }
            (((1.0 / tol).ln().max(0.0) + 8.0) / rate, Complex64::new(0.0, 0.0))
        }
        Envelope::PowerLaw(p) => {
            if !(p > 1.0) {
                return Err(Error::Domain(format!("power-law exponent {p} must exceed 1")));
            }
            (power_law_reach(p, tol, t), Complex64::new(0.0, 0.0))
        }
    };
    let lo = if half { 0.0 } else { -reach };
    let core = if let Envelope::Exponential(_) = env {
        let step = if beta != 0.0 { (PI / beta.abs()).min(1.0) } else { 1.0 };
        outward_panels(&mut integrand, reach, step, half, tol)?
    } else {
        let pts = fourier_split(t, beta, lo, reach, env);
        integrate_panels(&mut integrand, &pts, tol)?
    };
    if let Some(e) = failure {
        return Err(e);
    }
    let mut total = core.value + tail;
    if let Envelope::PowerLaw(p) = env {
        for side in [1.0, -1.0] {
            if half && side < 0.0 {
                continue;
            }
            let x = side * reach;
            let kx = kernel.eval(x, t)?;
            let c = kx * reach.powf(p);
            if beta == 0.0 {
                total += c * reach.powf(1.0 - p) / (p - 1.0);
            } else {
                // leading integration-by-parts term of ∫_X^∞ e^{iβx} c x^{−p} dx
                let b = side * beta;
                total += Complex64::new(0.0, 1.0) * Complex64::from_polar(kx, b * reach) / b;
            }
        }
    }
    Ok(total)
}

/// Panels of width ≈ `step` marching out from 0 to ±reach; a side stops
/// after three consecutive panels that are negligible at the tolerance.
fn outward_panels<F>(f: &mut F, reach: f64, step: f64, half: bool, tol: f64) -> Result<QuadResult<Complex64>>
where
    F: FnMut(f64) -> Complex64,
{
    let n = (reach / step).ceil().max(1.0) as usize;
    let h = reach / n as f64;
    let local = tol * h / reach;
    let mut acc = QuadResult {
        value: Complex64::new(0.0, 0.0),
        err_estimate: 0.0,
        evaluations: 0,
    };
    for side in [1.0, -1.0] {
        if half && side < 0.0 {
            continue;
        }
        let mut quiet = 0;
        for j in 0..n {
            let (a, b) = (side * j as f64 * h, side * (j + 1) as f64 * h);
            let r = adaptive(f, a.min(b), a.max(b), local, DEFAULT_DEPTH)?;
            let size = r.value.norm() + r.err_estimate;
            acc = acc.merge(r);
            if size <= 1e-3 * local {
                quiet += 1;
                if quiet == 3 {
                    break;
                }
            } else {
                quiet = 0;
            }
        }
    }
    Ok(acc)
}

fn power_law_reach(p: f64, tol: f64, t: f64) -> f64 {
    let scale = t.abs().max(1.0);
    scale * (1.0 / tol).powf(1.0 / (p - 1.0)).clamp(1e2, 1e5)
}

fn fourier_split(t: f64, beta: f64, lo: f64, hi: f64, env: Envelope) -> Vec<f64> {
    match env {
        Envelope::PowerLaw(_) => {
            // geometric panels away from the origin, refined by the e^{iβx} period
            let mut pts = vec![0.0];
            let mut x = 1.0f64.min(hi);
            let period = if beta != 0.0 { 2.0 * PI / beta.abs() } else { f64::INFINITY };
            while x < hi {
                pts.push(x);
                x = (x * 1.5).min(x + period).min(hi);
            }
            pts.push(hi);
            let mut all: Vec<f64> = if lo < 0.0 {
                pts.iter().rev().filter(|v| **v > 0.0).map(|v| -v).collect()
            } else {
                Vec::new()
            };
            all.extend(pts);
            all
        }
        _ => {
            let mut pts = phase_split(t, lo, hi);
            let step = if beta != 0.0 { (PI / beta.abs()).min(1.0) } else { 1.0 };
            let mut refined = Vec::with_capacity(pts.len());
            for w in pts.windows(2) {
                refined.push(w[0]);
                let n = ((w[1] - w[0]) / step).floor() as usize;
                for j in 1..=n {
                    let x = w[0] + (w[1] - w[0]) * j as f64 / (n + 1) as f64;
                    refined.push(x);
                }
            }
            refined.push(*pts.last().unwrap());
            pts = refined;
            pts
        }
    }
}

const LAPLACE_MAP_POWER: f64 = 4.0;
const LAPLACE_NEAR_BUDGET: usize = 40_000;

/// ∫₀^∞ e^{−μt} f(t) dt. Near the origin t = δ·u⁴ absorbs algebraic
/// singularities; if f oscillates without bound there, the piece is redone
/// in v = 1/t between sign changes with averaged partial sums. The tail
/// beyond the horizon is bounded by its exponential envelope.
pub fn laplace_numeric<F>(f: F, mu: f64, tol: f64, horizon: Option<f64>) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    if !(mu > 0.0) {
        return Err(Error::Domain(format!("Laplace variable {mu} must be positive")));
    }
    let h = horizon.unwrap_or(40.0 / mu);
    // envelope of |f| over [τ, 2τ] at two scales estimates the singularity order
    let window_max = |tau: f64| (0..32).map(|i| f(tau * (1.0 + i as f64 / 31.0)).abs()).fold(0.0, f64::max);
    let t1 = 1e-12 * h;
    let t2 = 1e-10 * h;
    let (f1, f2) = (window_max(t1), window_max(t2));
    if f1 > 0.0 && f2 > 0.0 {
        let order = (f1 / f2).ln() / (t2 / t1).ln();
        if order >= 1.0 - 1e-3 {
            return Err(Error::Divergent(order));
        }
    }
    let delta = 1e-2 * h;
    let mut far = |t: f64| (-mu * t).exp() * f(t);
    let pts: Vec<f64> = (0..=16).map(|i| delta + (h - delta) * i as f64 / 16.0).collect();
    let mut r = integrate_panels(&mut far, &pts, 0.5 * tol)?;

    let m = LAPLACE_MAP_POWER;
    let mut near = |u: f64| {
        let tt = delta * u.powf(m);
        m * delta * u.powf(m - 1.0) * (-mu * tt).exp() * f(tt)
    };
    let near_r = match adaptive_budget(&mut near, 0.0, 1.0, 0.5 * tol, DEFAULT_DEPTH, LAPLACE_NEAR_BUDGET) {
        Ok(v) => v,
        Err(_) => reciprocal_oscillatory(|v: f64| (-mu / v).exp() * f(1.0 / v) / (v * v), 1.0 / delta, 0.5 * tol)?,
    };
    r = r.merge(near_r);
    r.err_estimate += (-mu * h).exp() * f(h).abs() / mu;
    r.evaluations += 65;
    Ok(r)
}

// ∫_{v0}^∞ g for a decaying integrand with regular sign changes.
fn reciprocal_oscillatory<G: Fn(f64) -> f64>(g: G, v0: f64, tol: f64) -> Result<QuadResult> {
    let mut roots = vec![v0];
    let mut step = v0 / 64.0;
    let mut v = v0;
    let mut gv = g(v);
    let mut evals = 1;
    let target = 64;
    while roots.len() < target + 1 {
        let next = v + step;
        let gn = g(next);
        evals += 1;
        if gv == 0.0 || gv.signum() != gn.signum() {
            let (mut lo, mut hi) = (v, next);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if g(mid).signum() == gv.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            evals += 60;
            let root = 0.5 * (lo + hi);
            let gap = root - roots.last().copied().unwrap_or(v0);
            roots.push(root);
            if roots.len() > 2 {
                step = step.min(gap / 16.0).max(gap / 64.0);
            }
        } else if evals > 200_000 {
            return Err(Error::NonConvergence(DEFAULT_DEPTH));
        }
        v = next;
        gv = gn;
    }
    let mut sums = Vec::with_capacity(roots.len());
    let mut acc = 0.0;
    let mut err = 0.0;
    for w in roots.windows(2) {
        let r = adaptive(&mut |x: f64| g(x), w[0], w[1], tol / target as f64, DEFAULT_DEPTH)?;
        acc += r.value;
        err += r.err_estimate;
        evals += r.evaluations;
        sums.push(acc);
    }
    let mut level: Vec<f64> = sums[sums.len() / 2..].to_vec();
    while level.len() > 1 {
        level = level.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    let n = sums.len();
    err += (sums[n - 1] - sums[n - 2]).abs() * 1e-3;
    Ok(QuadResult {
        value: level[0],
        err_estimate: err,
        evaluations: evals,
    })
}

/// Central stencil description: derivative order, step and width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StencilSpec {
    pub order: usize,
    pub step: f64,
    pub points: usize,
}

impl StencilSpec {
    pub fn new(order: usize, step: f64, points: usize) -> Result<Self> {
        if !(1..=4).contains(&order) || !(step > 0.0) || points < order + 1 || coefficients(order, points).is_none() {
            return Err(Error::Domain(format!(
                "no central stencil for order {order} with {points} points and step {step}"
            )));
        }
        Ok(Self { order, step, points })
    }

    /// Default width (3, 5, 5, 7 points for orders 1–4) and step.
    pub fn default_for(order: usize, x0: f64) -> Result<Self> {
        let scale = x0.abs().max(1.0);
        let (points, power) = match order {
            1 => (3, 1.0 / 3.0),
            2 => (5, 1.0 / 6.0),
            3 => (5, 1.0 / 5.0),
            4 => (7, 1.0 / 6.0),
            _ => return Err(Error::Domain(format!("derivative order {order} outside 1..=4"))),
        };
        Self::new(order, f64::EPSILON.powf(power) * scale, points)
    }
}

fn coefficients(order: usize, points: usize) -> Option<&'static [f64]> {
    const D1_3: [f64; 3] = [-0.5, 0.0, 0.5];
    const D1_5: [f64; 5] = [1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0];
    const D1_7: [f64; 7] = [-1.0 / 60.0, 3.0 / 20.0, -0.75, 0.0, 0.75, -3.0 / 20.0, 1.0 / 60.0];
    const D2_3: [f64; 3] = [1.0, -2.0, 1.0];
    const D2_5: [f64; 5] = [-1.0 / 12.0, 4.0 / 3.0, -2.5, 4.0 / 3.0, -1.0 / 12.0];
    const D2_7: [f64; 7] = [1.0 / 90.0, -3.0 / 20.0, 1.5, -49.0 / 18.0, 1.5, -3.0 / 20.0, 1.0 / 90.0];
    const D3_5: [f64; 5] = [-0.5, 1.0, 0.0, -1.0, 0.5];
    const D3_7: [f64; 7] = [1.0 / 8.0, -1.0, 13.0 / 8.0, 0.0, -13.0 / 8.0, 1.0, -1.0 / 8.0];
    const D4_5: [f64; 5] = [1.0, -4.0, 6.0, -4.0, 1.0];
    const D4_7: [f64; 7] = [-1.0 / 6.0, 2.0, -6.5, 28.0 / 3.0, -6.5, 2.0, -1.0 / 6.0];
    match (order, points) {
        (1, 3) => Some(&D1_3),
        (1, 5) => Some(&D1_5),
        (1, 7) => Some(&D1_7),
        (2, 3) => Some(&D2_3),
        (2, 5) => Some(&D2_5),
        (2, 7) => Some(&D2_7),
        (3, 5) => Some(&D3_5),
        (3, 7) => Some(&D3_7),
        (4, 5) => Some(&D4_5),
        (4, 7) => Some(&D4_7),
        _ => None,
    }
}

/// Central finite-difference estimate of the `spec.order`-th derivative at x0.
pub fn finite_diff<F>(f: F, x0: f64, spec: &StencilSpec) -> f64
where
    F: Fn(f64) -> f64,
{
    let c = coefficients(spec.order, spec.points).expect("validated stencil");
    let half = (spec.points / 2) as isize;
    let mut acc = 0.0;
    for (i, w) in c.iter().enumerate() {
        if *w != 0.0 {
            acc += w * f(x0 + (i as isize - half) as f64 * spec.step);
        }
    }
    acc / spec.step.powi(spec.order as i32)
}
