use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;

#[allow(clippy::excessive_precision)]
const LANCZOS_P: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// sin(πx) with the argument reduced mod 2 first.
pub fn sinpi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).floor();
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r == 0.5 {
        return 1.0;
    }
    if r == 1.5 {
        return -1.0;
    }
    (PI * r).sin()
}

fn sinpi_c(z: Complex64) -> Complex64 {
    let shift = 2.0 * (z.re / 2.0).floor();
    (Complex64::new(z.re - shift, z.im) * PI).sin()
}

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

// ln Γ(z) for Re z >= 0.5
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut a = Complex64::new(LANCZOS_P[0], 0.0);
    for (k, p) in LANCZOS_P.iter().enumerate().skip(1) {
        a += *p / (z + k as f64);
    }
    let tt = z + LANCZOS_G + 0.5;
    HALF_LN_2PI + (z + 0.5) * tt.ln() - tt + a.ln()
}

fn ln_gamma_right_real(x: f64) -> f64 {
    let z = x - 1.0;
    let mut a = LANCZOS_P[0];
    for (k, p) in LANCZOS_P.iter().enumerate().skip(1) {
        a += p / (z + k as f64);
    }
    let tt = z + LANCZOS_G + 0.5;
    HALF_LN_2PI + (z + 0.5) * tt.ln() - tt + a.ln()
}

/// Γ(z) for complex z; reflection for Re z < 1/2.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && is_pole(z.re) {
        return Err(Error::Pole(z.re));
    }
    if z.re < 0.5 {
        let s = sinpi_c(z);
        Ok(PI / (s * ln_gamma_right(1.0 - z).exp()))
    } else {
        Ok(ln_gamma_right(z).exp())
    }
}

/// Γ(x) for real x.
pub fn gamma_real(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    if x < 0.5 {
        Ok(PI / (sinpi(x) * ln_gamma_right_real(1.0 - x).exp()))
    } else {
        Ok(ln_gamma_right_real(x).exp())
    }
}

/// (ln|Γ(x)|, sign Γ(x)) for real x off the poles.
pub fn ln_gamma_sign(x: f64) -> Result<(f64, f64)> {
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    if x < 0.5 {
        let s = sinpi(x);
        let lg = PI.ln() - s.abs().ln() - ln_gamma_right_real(1.0 - x);
        Ok((lg, s.signum()))
    } else {
        Ok((ln_gamma_right_real(x), 1.0))
    }
}

/// 1/Γ(x), zero at the poles.
pub fn rgamma_real(x: f64) -> f64 {
    if is_pole(x) {
        return 0.0;
    }
    if x < 0.5 {
        sinpi(x) * (-ln_gamma_right_real(1.0 - x)).exp() / PI
    } else {
        (-ln_gamma_right_real(x)).exp()
    }
}
