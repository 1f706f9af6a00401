use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument sits on a pole of the (k-)gamma function.
    #[error("pole of the k-gamma function at z = {z} (k = {k})")]
    Pole { k: f64, z: f64 },

    /// The value is finite in log space but not representable as an `f64`.
    #[error("k-gamma overflow at z = {z} (k = {k}); use log_k_gamma")]
    Overflow { k: f64, z: f64 },

    /// A parameter violates the operation's domain.
    #[error("domain error in `{param}`: {reason}")]
    Domain { param: &'static str, reason: String },

    /// The integrand returned NaN or an infinity at an interior node.
    #[error("integrand is not finite at interior node x = {x}")]
    NonFiniteSample { x: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(param: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            param,
            reason: reason.into(),
        }
    }
}

/// Rejects anything that is not a finite, strictly positive real.
pub(crate) fn require_positive(param: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::domain(param, format!("must be finite and > 0, got {value}")))
    }
}

pub(crate) fn require_non_negative(param: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::domain(param, format!("must be finite and >= 0, got {value}")))
    }
}

pub(crate) fn require_finite(param: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::domain(param, format!("must be finite, got {value}")))
    }
}
