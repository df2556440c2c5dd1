//! Space-time kernels with metadata, shared by every solution module.

use std::fmt;
use std::sync::Arc;

use crate::error::Result;

/// Large-|x| behaviour of a kernel, used to close infinite integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Envelope {
    /// Tail is the free Fresnel chirp cos(x²/2t − π/4)/√(2πt) with unit weight.
    OscillatoryUnit,
    /// |k(x)| ≤ C e^{−rate |x|}.
    Exponential(f64),
    /// k(x) ~ C |x|^{−exponent}, exponent > 1.
    PowerLaw(f64),
}

/// Spatial support of a kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    Line,
    HalfLine,
}

type EvalFn = dyn Fn(f64, f64) -> Result<f64> + Send + Sync;

/// A callable density u(x, t) with an identity label and parameter record.
#[derive(Clone)]
pub struct SignedKernel {
    eval: Arc<EvalFn>,
    pub identity: String,
    pub params: Vec<(String, f64)>,
    pub envelope: Option<Envelope>,
    pub support: Support,
}

impl SignedKernel {
    pub fn new<F>(identity: impl Into<String>, envelope: Option<Envelope>, eval: F) -> Self
    where
        F: Fn(f64, f64) -> Result<f64> + Send + Sync + 'static,
    {
        Self {
            eval: Arc::new(eval),
            identity: identity.into(),
            params: Vec::new(),
            envelope,
            support: Support::Line,
        }
    }

    pub fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.push((name.to_string(), value));
        self
    }

    pub fn on_half_line(mut self) -> Self {
        self.support = Support::HalfLine;
        self
    }

    pub fn eval(&self, x: f64, t: f64) -> Result<f64> {
        (self.eval)(x, t)
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }
}

impl fmt::Debug for SignedKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SignedKernel")
            .field("identity", &self.identity)
            .field("params", &self.params)
            .field("envelope", &self.envelope)
            .field("support", &self.support)
            .finish()
    }
}
