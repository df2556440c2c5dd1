//! Plate kernels: the d-dimensional Fresnel law, its Fourier transform, and
//! circular-plate kernels obtained by inversion in the radius.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{check_time, Error, Result};
use crate::quad::{finite_diff, integrate_adaptive, phase_points, phase_split, StencilSpec};
use crate::specfun::{fresnel_phase_integral, fresnel_phase_integral_sin};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskSpec {
    pub radius: f64,
}

impl DiskSpec {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Domain(format!("disk radius must be positive, got {radius}")));
        }
        Ok(Self { radius })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub theta: f64,
}

impl PolarPoint {
    pub fn new(r: f64, theta: f64, disk: DiskSpec) -> Result<Self> {
        check_radius(r, disk)?;
        if !(0.0..2.0 * PI).contains(&theta) {
            return Err(Error::Domain(format!("angle {theta} outside [0, 2π)")));
        }
        Ok(Self { r, theta })
    }
}

/// Which circular-plate density: p (adjoint, carries the r Jacobian) or q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiskForm {
    P,
    Q,
}

fn check_radius(r: f64, disk: DiskSpec) -> Result<()> {
    if !(r > 0.0 && r < disk.radius) {
        return Err(Error::Domain(format!("radius {r} outside (0, {})", disk.radius)));
    }
    Ok(())
}

/// (2πt)^{−d/2} cos(Σx_j²/2t − dπ/4).
pub fn plate_kernel(xs: &[f64], t: f64) -> Result<f64> {
    check_time(t)?;
    if xs.is_empty() {
        return Err(Error::Empty);
    }
    let d = xs.len() as f64;
    let r2: f64 = xs.iter().map(|x| x * x).sum();
    Ok((r2 / (2.0 * t) - d * FRAC_PI_4).cos() / (2.0 * PI * t).powf(d / 2.0))
}

/// cos(Σβ_j² t/2).
pub fn plate_fourier(betas: &[f64], t: f64) -> Result<f64> {
    check_time(t)?;
    if betas.is_empty() {
        return Err(Error::Empty);
    }
    Ok((betas.iter().map(|b| b * b).sum::<f64>() * t / 2.0).cos())
}

/// u(x₁,t)u(x₂,t) − ½u(x₁,x₂,t) − cos((x₁² − x₂²)/2t)/4πt; zero up to rounding.
pub fn nonfactorization_gap(x1: f64, x2: f64, t: f64) -> Result<f64> {
    let product = plate_kernel(&[x1], t)? * plate_kernel(&[x2], t)?;
    let joint = plate_kernel(&[x1, x2], t)?;
    Ok(product - 0.5 * joint - ((x1 * x1 - x2 * x2) / (2.0 * t)).cos() / (4.0 * PI * t))
}

const CHIRP_CORE_INDEX: usize = 24;

/// ∫_ℝ e^{i(βx + x²/2t)} dx: quadrature on a core window in the shifted
/// variable y = x + βt, Fresnel tails beyond it.
pub fn chirp_fourier(beta: f64, t: f64, tol: f64) -> Result<Complex64> {
    check_time(t)?;
    let shift = beta * t;
    let x = phase_points(t, CHIRP_CORE_INDEX);
    let pts = phase_split(t, -x, x);
    let mut re = 0.0;
    let mut im = 0.0;
    for w in pts.windows(2) {
        let share = tol * (w[1] - w[0]) / (2.0 * x);
        let phase = |y: f64| (y - shift) * beta + (y - shift) * (y - shift) / (2.0 * t);
        re += integrate_adaptive(|y| phase(y).cos(), w[0], w[1], share)?.value;
        im += integrate_adaptive(|y| phase(y).sin(), w[0], w[1], share)?.value;
    }
    // tails: e^{i(y² /2t − β²t/2)}, with cos, sin of y²/2t from the π/4-shifted integrals
    let c = fresnel_phase_integral(x, f64::INFINITY, t);
    let s = fresnel_phase_integral_sin(x, f64::INFINITY, t);
    let tail = 2.0 * Complex64::new(c - s, c + s) / SQRT_2 * Complex64::from_polar(1.0, -beta * beta * t / 2.0);
    Ok(Complex64::new(re, im) + tail)
}

/// ∬ e^{i(β₁x₁ + β₂x₂)} u(x₁,x₂,t) dx₁dx₂ for d = 2 through the product
/// split of sin((x₁² + x₂²)/2t) and numeric one-dimensional chirp transforms.
pub fn plate_fourier_numeric_2d(b1: f64, b2: f64, t: f64, tol: f64) -> Result<f64> {
    let plus = chirp_fourier(b1, t, tol)? * chirp_fourier(b2, t, tol)?;
    let minus = (chirp_fourier(-b1, t, tol)? * chirp_fourier(-b2, t, tol)?).conj();
    let v = (plus - minus) / Complex64::new(0.0, 2.0) / (2.0 * PI * t);
    if v.im.abs() > 1e-8 {
        return Err(Error::Range(format!("2-D transform has imaginary part {:e}", v.im)));
    }
    Ok(v.re)
}

/// ∬ u(x₁,x₂,t) = (1/πt)(∫_ℝ sin(x²/2t)dx)², the line integral by quadrature
/// on a core window and Fresnel tails.
pub fn plate_mass_2d(t: f64) -> Result<f64> {
    let line = chirp_fourier(0.0, t, 1e-13)?.im;
    Ok(line * line / (PI * t))
}

/// (q_ref, p_ref) = ((1/t)[e^{−r²/2t} + e^{−R⁴/2r²t}], (r/t)e^{−r²/2t} + (R⁴/r³t)e^{−R⁴/2r²t}).
pub fn disk_heat_kernels(r: f64, t: f64, disk: DiskSpec) -> Result<(f64, f64)> {
    check_time(t)?;
    check_radius(r, disk)?;
    let (free, image) = images(r, t, disk);
    let (a, b) = ((-free).exp(), (-image).exp());
    let r4 = disk.radius.powi(4);
    Ok(((a + b) / t, r * a / t + r4 / (r.powi(3) * t) * b))
}

fn images(r: f64, t: f64, disk: DiskSpec) -> (f64, f64) {
    let r4 = disk.radius.powi(4);
    (r * r / (2.0 * t), r4 / (2.0 * r * r * t))
}

/// (q̄_ref, p̄_ref) = ((1/t)[sin(r²/2t) + sin(R⁴/2r²t)], (r/t)sin(r²/2t) + (R⁴/r³t)sin(R⁴/2r²t)).
pub fn disk_vibration_kernels(r: f64, t: f64, disk: DiskSpec) -> Result<(f64, f64)> {
    check_time(t)?;
    check_radius(r, disk)?;
    Ok(vibration_unchecked(r, t, disk))
}

/// Same formulas without the radius guard, for stencils that straddle r = R.
pub(crate) fn vibration_unchecked(r: f64, t: f64, disk: DiskSpec) -> (f64, f64) {
    let (free, image) = images(r, t, disk);
    let (a, b) = (free.sin(), image.sin());
    let r4 = disk.radius.powi(4);
    ((a + b) / t, r * a / t + r4 / (r.powi(3) * t) * b)
}

/// ∂q̄_ref/∂r at r = R by a 7-point central stencil; zero for the Neumann plate.
pub fn disk_edge_slope(t: f64, disk: DiskSpec) -> Result<f64> {
    check_time(t)?;
    let spec = StencilSpec::new(1, 1e-3 * disk.radius, 7)?;
    Ok(finite_diff(|r| vibration_unchecked(r, t, disk).0, disk.radius, &spec))
}

/// p(r, θ, t) = p̄_ref(r, t)/2π.
pub fn disk_polar_density(p: PolarPoint, t: f64, disk: DiskSpec) -> Result<f64> {
    Ok(disk_vibration_kernels(p.r, t, disk)?.1 / (2.0 * PI))
}

fn cartesian_radius(x: f64, y: f64, disk: DiskSpec) -> Result<f64> {
    let rho2 = x * x + y * y;
    if !(rho2 > 0.0 && rho2 < disk.radius * disk.radius) {
        return Err(Error::Domain(format!("({x}, {y}) outside the punctured disk of radius {}", disk.radius)));
    }
    Ok(rho2)
}

/// The Cartesian forms as printed:
/// p = [sin(ρ²/2t) + R⁴ρ⁻⁸ sin(R⁴/2tρ⁴)]/2πt, q = [sin(ρ²/2t) + sin(R⁴/2tρ⁴)]/(2πtρ), ρ² = x² + y².
pub fn disk_density_cartesian(x: f64, y: f64, t: f64, disk: DiskSpec, which: DiskForm) -> Result<f64> {
    check_time(t)?;
    let rho2 = cartesian_radius(x, y, disk)?;
    let r4 = disk.radius.powi(4);
    let free = (rho2 / (2.0 * t)).sin();
    let image = (r4 / (2.0 * t * rho2 * rho2)).sin();
    Ok(match which {
        DiskForm::P => (free + r4 / rho2.powi(4) * image) / (2.0 * PI * t),
        DiskForm::Q => (free + image) / (2.0 * PI * t * rho2.sqrt()),
    })
}

/// The polar densities p̄_ref/2π and q̄_ref/2π divided by the Jacobian ρ.
pub fn disk_density_from_polar(x: f64, y: f64, t: f64, disk: DiskSpec, which: DiskForm) -> Result<f64> {
    check_time(t)?;
    let rho = cartesian_radius(x, y, disk)?.sqrt();
    let (q, p) = vibration_unchecked(rho, t, disk);
    Ok(match which {
        DiskForm::P => p,
        DiskForm::Q => q,
    } / (2.0 * PI * rho))
}

/// ∫₀^R p̄_ref dr. The image term is moved outside the disk by r′ = R²/r and
/// joins the free term on [R, ∞), where ∫ (r/t)sin(r²/2t) dr = cos(R²/2t).
pub fn disk_mass(t: f64, disk: DiskSpec) -> Result<f64> {
    check_time(t)?;
    let inner = integrate_adaptive(|r| r / t * (r * r / (2.0 * t)).sin(), 0.0, disk.radius, 1e-13)?.value;
    let outer = (disk.radius * disk.radius / (2.0 * t)).cos();
    Ok(inner + outer)
}
