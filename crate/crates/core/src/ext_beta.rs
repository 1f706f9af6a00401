//! Euler-type beta integrals with an exponential cutoff.
//!
//! ```text
//! B_k(x, y; A; m) = ∫₀¹ t^{x/k-1} (1-t)^{y/k-1} exp(-A / (t(1-t))^{m/k}) dt
//! ```
//!
//! This integral carries no `1/k` prefactor, while the gamma-ratio k-beta
//! `B_k(x, y) = (1/k)·∫₀¹ t^{x/k-1}(1-t)^{y/k-1} dt` does. Both are kept
//! literally, so `B_k(x, y; 0; m) = k · B_k(x, y)`; [`k_consistency_ratio`]
//! reports that factor.
//!
//! The classical cutoff families are parameter restrictions:
//! [`chaudhry_beta`] is `k = m = 1`, [`lee_beta`] is `k = 1`. The Lee form is
//! often quoted with the condition `p > m > 0`, but the integral converges
//! for every `p >= 0`, `m > 0`, which is the domain accepted here.

use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::quadrature::{integrate_unit, Node, QuadratureConfig, QuadratureResult};
use crate::special::{k_beta, KOrder};

/// Smallest `min(x, y)/k` accepted without a cutoff (`A = 0`).
pub const MIN_UNREGULARIZED_EXPONENT: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtBetaParams {
    pub k: KOrder,
    pub x: f64,
    pub y: f64,
    /// Cutoff strength `A >= 0` (σ in the Chaudhry form, `p` in the Lee form).
    pub cutoff: f64,
    /// Cutoff exponent `m > 0`.
    pub m: f64,
}

impl ExtBetaParams {
    pub fn new(k: KOrder, x: f64, y: f64, cutoff: f64, m: f64) -> Result<Self> {
        let params = ExtBetaParams { k, x, y, cutoff, m };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("x", self.x)?;
        require_positive("y", self.y)?;
        require_non_negative("A", self.cutoff)?;
        require_positive("m", self.m)?;
        if self.cutoff == 0.0 {
            let smallest = self.x.min(self.y) / self.k.get();
            if smallest < MIN_UNREGULARIZED_EXPONENT {
                return Err(Error::domain(
                    if self.x <= self.y { "x" } else { "y" },
                    format!("with A = 0, min(x, y)/k must be >= {MIN_UNREGULARIZED_EXPONENT}, got {smallest}"),
                ));
            }
        }
        Ok(())
    }

    pub(crate) fn weight(&self) -> CutoffWeight {
        let k = self.k.get();
        CutoffWeight {
            left: self.x / k - 1.0,
            right: self.y / k - 1.0,
            cutoff: self.cutoff,
            power: self.m / k,
        }
    }
}

/// `t^{left} (1-t)^{right} exp(-cutoff / (t(1-t))^{power})`, evaluated in log space.
///
/// The cutoff factor underflows cleanly to zero near the endpoints instead
/// of producing `inf · 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct CutoffWeight {
    pub left: f64,
    pub right: f64,
    pub cutoff: f64,
    pub power: f64,
}

impl CutoffWeight {
    /// Weight in terms of the distances to both ends of the interval.
    #[inline]
    pub fn ln_at(&self, from_lo: f64, to_hi: f64) -> f64 {
        let ln_lo = from_lo.ln();
        let ln_hi = to_hi.ln();
        let mut ln_w = self.left * ln_lo + self.right * ln_hi;
        if self.cutoff != 0.0 {
            ln_w -= self.cutoff * (-self.power * (ln_lo + ln_hi)).exp();
        }
        ln_w
    }

    #[inline]
    pub fn at(&self, node: Node) -> f64 {
        self.ln_at(node.from_lo, node.to_hi).exp()
    }
}

/// `B_k(x, y; A; m)` by tanh-sinh quadrature.
pub fn ext_k_beta(params: &ExtBetaParams, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    params.validate()?;
    let weight = params.weight();
    integrate_unit(|node| weight.at(node), cfg)
}

/// Chaudhry's extension `B(x, y; σ) = ∫₀¹ t^{x-1}(1-t)^{y-1} exp(-σ/(t(1-t))) dt`.
pub fn chaudhry_beta(x: f64, y: f64, sigma: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    ext_k_beta(&ExtBetaParams::new(KOrder::ONE, x, y, sigma, 1.0)?, cfg)
}

/// Lee's generalization `B(x, y; p; m) = ∫₀¹ t^{x-1}(1-t)^{y-1} exp(-p/(t(1-t))^m) dt`.
pub fn lee_beta(x: f64, y: f64, p: f64, m: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    ext_k_beta(&ExtBetaParams::new(KOrder::ONE, x, y, p, m)?, cfg)
}

/// `B_k(x, y; 0; m) / B_k(x, y)`, which equals `k` when both are exact.
pub fn k_consistency_ratio(k: KOrder, x: f64, y: f64, cfg: &QuadratureConfig) -> Result<f64> {
    let integral = ext_k_beta(&ExtBetaParams::new(k, x, y, 0.0, 1.0)?, cfg)?;
    Ok(integral.value / k_beta(k, x, y)?)
}
