//! Curve data for the standard figure set, and a bit-stable CSV writer.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::fracrod::{u2nu_eval, u_fourthirds_airy, FracOrder};
use crate::plates::{disk_vibration_kernels, DiskSpec};
use crate::rod::fresnel_kernel;
use crate::subord::{biquadratic_from_subordination, double_cauchy_density};

pub const FIGURE_IDS: [&str; 6] =
    ["fig-rod-profiles", "fig-frac-43", "fig-disk", "fig-biquadratic", "fig-double-cauchy", "fig-frac-table"];

/// One named curve of a figure.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub name: String,
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
}

impl Curve {
    fn sample(name: impl Into<String>, grid: Vec<f64>, f: impl Fn(f64) -> Result<f64>) -> Result<Self> {
        let values = grid.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
        Ok(Self { name: name.into(), grid, values })
    }

    pub fn file_name(&self, figure: &str) -> String {
        format!("{figure}_{}.csv", self.name)
    }
}

/// n equally spaced points from a to b inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// Midpoints of n equal cells of (a, b).
pub fn midpoints(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * (i as f64 + 0.5) / n as f64).collect()
}

pub fn figure(id: &str) -> Result<Vec<Curve>> {
    match id {
        "fig-rod-profiles" => [1.0, 20.0, 40.0, 60.0]
            .iter()
            .map(|&t| Curve::sample(format!("t{t}"), linspace(-15.0, 15.0, 601), |x| fresnel_kernel(x, t)))
            .collect(),
        "fig-frac-43" => Ok(vec![Curve::sample("t1", linspace(-6.0, 6.0, 481), |x| u_fourthirds_airy(x, 1.0))?]),
        "fig-disk" => {
            let disk = DiskSpec::new(1.0)?;
            [1.0, 50.0, 100.0]
                .iter()
                .map(|&t| Curve::sample(format!("t{t}"), midpoints(0.0, 1.0, 200), |r| Ok(disk_vibration_kernels(r, t, disk)?.0)))
                .collect()
        }
        "fig-biquadratic" => Ok(vec![Curve::sample("t1", linspace(-6.0, 6.0, 241), |x| biquadratic_from_subordination(x, 1.0))?]),
        "fig-double-cauchy" => [1.0, 2.0, 4.0]
            .iter()
            .map(|&t| Curve::sample(format!("t{t}"), linspace(-10.0, 10.0, 401), |x| double_cauchy_density(x, t)))
            .collect(),
        "fig-frac-table" => [(1, 3), (1, 2), (2, 3), (1, 1)]
            .iter()
            .map(|&(p, q)| {
                let o = FracOrder::new(p as f64 / q as f64)?;
                Curve::sample(format!("nu{p}_{q}"), linspace(-6.0, 6.0, 241), |x| u2nu_eval(x, 1.0, o))
            })
            .collect(),
        other => Err(Error::Domain(format!("unknown figure '{other}'"))),
    }
}

/// `%.17g`: 17 significant digits, exponent form outside [1e-5, 1e17).
pub fn format_g17(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        trim_zeros(format!("{v:.*}", (16 - exp) as usize))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa.to_string()), exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Header `x,value`, LF line endings.
pub fn write_csv(mut w: impl Write, grid: &[f64], values: &[f64]) -> io::Result<()> {
    writeln!(w, "x,value")?;
    for (x, v) in grid.iter().zip(values) {
        writeln!(w, "{},{}", format_g17(*x), format_g17(*v))?;
    }
    Ok(())
}
