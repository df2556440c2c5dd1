use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma pole at z = {0}")]
    Pole(f64),
    #[error("time must be positive, got t = {0}")]
    NonPositiveTime(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("series did not converge within {0} terms")]
    BudgetExceeded(usize),
    #[error("airy argument |z| = {0} beyond evaluation cutoff")]
    Overflow(f64),
    #[error("adaptive quadrature did not converge (depth limit {0})")]
    NonConvergence(usize),
    #[error("infinite tail needs a unit or exponentially decaying amplitude")]
    UnsupportedTail,
    #[error("kernel declares no tail envelope")]
    EnvelopeMissing,
    #[error("integrand singularity at the origin is not integrable (order {0})")]
    Divergent(f64),
    #[error("dimension {got} exceeds the limit {max}")]
    DimensionGuard { got: usize, max: usize },
    #[error("fractional order {0} has no closed-form subordinator")]
    UnsupportedOrder(f64),
    #[error("denominator {0:e} too close to zero")]
    NearZeroDenominator(f64),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("input vector is empty")]
    Empty,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_time(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveTime(t))
    }
}
