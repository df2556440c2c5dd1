//! Special functions: Gamma, Fresnel integrals, Airy, modified Bessel,
//! Mittag-Leffler, Wright and M-Wright.

mod airy;
mod fresnel;
mod gamma;
mod series;

pub use airy::{airy_ai, airy_ai_real, AIRY_SERIES_CUTOFF};
pub use fresnel::{
    cis_square, fresnel_cs, fresnel_phase_integral, fresnel_phase_integral_sin, FRESNEL_LIMIT,
};
pub use gamma::{gamma, gamma_real, ln_gamma_sign, rgamma_real, sinpi};
pub use series::{
    bessel_i, mittag_leffler, mwright, mwright_complex, sum_series, wright, CompensatedSum, SeriesControl,
    ML_RADIUS,
};

/// Complex scalar used throughout.
pub type ComplexValue = num_complex::Complex64;
