use crate::error::{require_finite, require_non_negative, require_positive, Error, Result};
use crate::mittag_leffler::MLParams;

/// Inputs of the unit-interval identity with kernel `t^{a/k-1}(1-t)^{b/k-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem1Params {
    pub ml: MLParams,
    pub a: f64,
    pub b: f64,
    pub m: f64,
    /// Cutoff strength `A >= 0`.
    pub cutoff: f64,
    pub z: f64,
}

impl Theorem1Params {
    pub fn validate(&self) -> Result<()> {
        self.ml.validate()?;
        require_positive("a", self.a)?;
        require_positive("b", self.b)?;
        require_positive("m", self.m)?;
        require_non_negative("A", self.cutoff)?;
        require_finite("z", self.z)?;
        Ok(())
    }
}

/// Inputs of the interval identity on `(t, x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem2Params {
    pub ml: MLParams,
    pub rho: f64,
    pub mu: f64,
    pub m: f64,
    pub cutoff: f64,
    pub z: f64,
    /// Lower endpoint.
    pub t: f64,
    /// Upper endpoint.
    pub x: f64,
}

impl Theorem2Params {
    pub fn validate(&self) -> Result<()> {
        self.ml.validate()?;
        require_positive("rho", self.rho)?;
        require_positive("mu", self.mu)?;
        require_positive("m", self.m)?;
        require_non_negative("A", self.cutoff)?;
        require_finite("z", self.z)?;
        require_finite("t", self.t)?;
        require_finite("x", self.x)?;
        if self.t >= self.x {
            return Err(Error::domain(
                "t",
                format!("need t < x, got t = {}, x = {}", self.t, self.x),
            ));
        }
        Ok(())
    }

    pub fn length(&self) -> f64 {
        self.x - self.t
    }
}

/// Inputs of the unit-interval identity with the binomial factor
/// `(1 - u t^{ρ/k}(1-t)^{σ/k})^{-a}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem3Params {
    pub ml: MLParams,
    pub lambda: f64,
    pub mu: f64,
    pub rho: f64,
    pub sigma: f64,
    /// Binomial exponent `a >= 0`.
    pub a_exp: f64,
    pub u: f64,
    pub m: f64,
    pub cutoff: f64,
    pub z: f64,
}

impl Theorem3Params {
    pub fn validate(&self) -> Result<()> {
        self.ml.validate()?;
        require_positive("lambda", self.lambda)?;
        require_finite("mu", self.mu)?;
        if self.mu <= self.lambda {
            return Err(Error::domain(
                "mu",
                format!("need mu > lambda, got mu = {}, lambda = {}", self.mu, self.lambda),
            ));
        }
        require_positive("rho", self.rho)?;
        require_positive("sigma", self.sigma)?;
        require_non_negative("a_exp", self.a_exp)?;
        require_finite("u", self.u)?;
        if self.u.abs() >= 1.0 {
            return Err(Error::domain("u", format!("need |u| < 1, got {}", self.u)));
        }
        require_positive("m", self.m)?;
        require_non_negative("A", self.cutoff)?;
        require_finite("z", self.z)?;
        Ok(())
    }

    /// The same kernel without the binomial factor: `a = λ`, `b = μ - λ`.
    pub fn without_binomial(&self) -> Theorem1Params {
        Theorem1Params {
            ml: self.ml,
            a: self.lambda,
            b: self.mu - self.lambda,
            m: self.m,
            cutoff: self.cutoff,
            z: self.z,
        }
    }

    /// Whether the binomial factor is identically one.
    pub fn binomial_is_trivial(&self) -> bool {
        self.u == 0.0 || self.a_exp == 0.0
    }
}
