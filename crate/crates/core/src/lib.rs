//! Fresnel rod-vibration kernels and their relatives: fractional, plate,
//! pseudo-process and subordinated laws, with a verification harness.

pub mod error;
pub mod figures;
pub mod fracrod;
pub mod kernel;
pub mod plates;
pub mod pseudo;
pub mod quad;
pub mod rod;
pub mod specfun;
pub mod subord;
pub mod verify;

pub use error::{Error, Result};
pub use kernel::{Envelope, SignedKernel, Support};
pub use quad::{QuadResult, StencilSpec};
pub use specfun::{ComplexValue, SeriesControl};
