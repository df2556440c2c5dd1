//! Gauss–Kronrod 10/21 panel rule.

use std::ops::{Add, Mul};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208703046378,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

pub(crate) const PANEL_EVALS: usize = 21;

/// One 21-point panel on [a, b]: (Kronrod value, Gauss value, Kronrod value of |f|).
pub(crate) fn gk21<V, F>(f: &mut F, a: f64, b: f64) -> (V, V, f64)
where
    V: Copy + Default + Add<Output = V> + Mul<f64, Output = V> + Magnitude,
    F: FnMut(f64) -> V,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[10];
    let mut g = V::default();
    let mut kabs = fc.magnitude() * WGK[10];
    for j in 0..10 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        let s = f1 + f2;
        k = k + s * WGK[j];
        kabs += (f1.magnitude() + f2.magnitude()) * WGK[j];
        if j % 2 == 1 {
            g = g + s * WG[j / 2];
        }
    }
    (k * h, g * h, kabs * h.abs())
}

pub(crate) trait Magnitude {
    fn magnitude(&self) -> f64;
}

impl Magnitude for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Magnitude for num_complex::Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Fixed composite Kronrod sum with `n` equal panels, no error control.
pub(crate) fn composite<V, F>(mut f: F, a: f64, b: f64, n: usize) -> V
where
    V: Copy + Default + Add<Output = V> + Mul<f64, Output = V> + Magnitude,
    F: FnMut(f64) -> V,
{
    let w = (b - a) / n as f64;
    let mut acc = V::default();
    for i in 0..n {
        let lo = a + w * i as f64;
        let hi = if i + 1 == n { b } else { lo + w };
        let (k, _, _) = gk21(&mut f, lo, hi);
        acc = acc + k;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exactness() {
        // Gauss 10 is exact to degree 19, Kronrod 21 to degree 31
        let (k, g, _) = gk21(&mut |x: f64| x.powi(19) + x.powi(18), 0.0, 1.0);
        let exact = 1.0 / 20.0 + 1.0 / 19.0;
        assert!((k - exact).abs() < 1e-15);
        assert!((g - exact).abs() < 1e-15);
        let (k, _, _) = gk21(&mut |x: f64| x.powi(30), -1.0, 1.0);
        assert!((k - 2.0 / 31.0).abs() < 1e-15);
    }
}
