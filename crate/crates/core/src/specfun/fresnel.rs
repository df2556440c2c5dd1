use num_complex::Complex64;

use crate::quad::gk::composite;

/// ½√(π/2), the common limit of C and S at +∞.
pub const FRESNEL_LIMIT: f64 = 0.626_657_068_657_750_1;

const SERIES_MAX: f64 = 2.0;
const ASYMPTOTIC_MIN: f64 = 6.0;

/// e^{i x²} with x² split into an exact head and tail.
pub fn cis_square(x: f64) -> Complex64 {
    let hi = x * x;
    let lo = x.mul_add(x, -hi);
    let (s, c) = hi.sin_cos();
    let (sl, cl) = lo.sin_cos();
    Complex64::new(c * cl - s * sl, s * cl + c * sl)
}

fn series(x: f64) -> (f64, f64) {
    let x2 = x * x;
    let mut c = 0.0;
    let mut s = 0.0;
    // t_n = (-1)^n x^{2n+1}/n!, odd/even n feed S/C
    let mut term = x;
    let mut n = 0usize;
    loop {
        let even = n % 2 == 0;
        let contrib = term / (2 * n + 1) as f64;
        if n % 4 == 0 || n % 4 == 1 {
            if even {
                c += contrib;
            } else {
                s += contrib;
            }
        } else if even {
            c -= contrib;
        } else {
            s -= contrib;
        }
        n += 1;
        term *= x2 / n as f64;
        if term.abs() < 1e-18 * (c.abs() + s.abs()).max(1e-300) && n > 2 {
            break;
        }
        if n > 200 {
            break;
        }
    }
    (c, s)
}

// ∫_x^∞ e^{iw²} dw for x ≥ ASYMPTOTIC_MIN
fn tail(x: f64) -> Complex64 {
    let r = 1.0 / (2.0 * x * x);
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let step = Complex64::new(0.0, -r);
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        term = term * step * (2 * k - 1) as f64;
        let m = term.norm();
        if m > prev || m < 1e-18 {
            break;
        }
        sum += term;
        prev = m;
    }
    Complex64::new(0.0, 1.0) * cis_square(x) * sum / (2.0 * x)
}

/// Fresnel integrals C(x) = ∫₀ˣ cos w² dw and S(x) = ∫₀ˣ sin w² dw.
pub fn fresnel_cs(x: f64) -> (f64, f64) {
    if x.is_nan() {
        return (f64::NAN, f64::NAN);
    }
    let ax = x.abs();
    let (c, s) = if ax < SERIES_MAX {
        series(ax)
    } else if ax < ASYMPTOTIC_MIN {
        let (c0, s0) = series(SERIES_MAX);
        let panels = ((ax - SERIES_MAX) / 0.25).ceil().max(1.0) as usize;
        let v: Complex64 = composite(cis_square, SERIES_MAX, ax, panels);
        (c0 + v.re, s0 + v.im)
    } else if ax >= 4_503_599_627_370_496.0 {
        (FRESNEL_LIMIT, FRESNEL_LIMIT)
    } else {
        let v = tail(ax);
        (FRESNEL_LIMIT - v.re, FRESNEL_LIMIT - v.im)
    };
    if x < 0.0 {
        (-c, -s)
    } else {
        (c, s)
    }
}

/// ∫_a^b cos(w²/2t − π/4) dw in closed form; a, b may be infinite.
pub fn fresnel_phase_integral(a: f64, b: f64, t: f64) -> f64 {
    let scale = (2.0 * t).sqrt();
    let g = |w: f64| {
        if w == f64::INFINITY {
            2.0 * FRESNEL_LIMIT
        } else if w == f64::NEG_INFINITY {
            -2.0 * FRESNEL_LIMIT
        } else {
            let (c, s) = fresnel_cs(w / scale);
            c + s
        }
    };
    t.sqrt() * (g(b) - g(a))
}

/// ∫_a^b sin(w²/2t − π/4) dw in closed form; a, b may be infinite.
pub fn fresnel_phase_integral_sin(a: f64, b: f64, t: f64) -> f64 {
    let scale = (2.0 * t).sqrt();
    let g = |w: f64| {
        if w.is_infinite() {
            0.0
        } else {
            let (c, s) = fresnel_cs(w / scale);
            s - c
        }
    };
    t.sqrt() * (g(b) - g(a))
}
