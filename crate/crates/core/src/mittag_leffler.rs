//! The Mittag-Leffler hierarchy, evaluated by truncated power series.
//!
//! Every family is a parameter collapse of the six-parameter k-form
//!
//! ```text
//! E^{γ,δ,q}_{k,α,β,p}(z) = Σ_n (γ)_{qn,k} zⁿ / (Γ_k(αn + β) (δ)_{pn,k})
//! ```
//!
//! | function            | collapse                    |
//! |---------------------|-----------------------------|
//! | [`ml_classic`]      | `k = β = γ = δ = p = q = 1` |
//! | [`ml_wiman`]        | `k = γ = δ = p = q = 1`     |
//! | [`ml_prabhakar`]    | `k = δ = p = q = 1`         |
//! | [`ml_shukla`]       | `k = δ = p = 1`             |
//! | [`ml_salim`]        | `k = p = q = 1`             |
//! | [`ml_salim_faraj`]  | `k = 1`                     |
//!
//! and each reduction runs the same code path as [`ml_k`].
//!
//! Each term is formed independently in log space rather than by a term
//! ratio recurrence, because fractional strides `q`, `p` turn the ratio into
//! a quotient of gammas anyway.

use crate::error::{require_positive, Error, Result};
use crate::series::{sum_series, SeriesConfig, SeriesResult};
use crate::special::{ln_k_gamma, KOrder};

/// Parameters `(k, α, β, γ, δ, p, q)` of the generalized k-Mittag-Leffler function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLParams {
    pub k: KOrder,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub p: f64,
    pub q: f64,
}

impl MLParams {
    pub fn new(k: KOrder, alpha: f64, beta: f64, gamma: f64, delta: f64, p: f64, q: f64) -> Result<Self> {
        let params = MLParams {
            k,
            alpha,
            beta,
            gamma,
            delta,
            p,
            q,
        };
        params.validate()?;
        Ok(params)
    }

    /// All parameters equal to one: the exponential series.
    pub fn exponential() -> Self {
        MLParams {
            k: KOrder::ONE,
            alpha: 1.0,
            beta: 1.0,
            gamma: 1.0,
            delta: 1.0,
            p: 1.0,
            q: 1.0,
        }
    }

    /// Positivity of every parameter and the growth condition `q < α + p`.
    ///
    /// The condition is enforced as written, without rescaling by `k`;
    /// [`SeriesResult::tail_ratio`] records the observed decay instead.
    pub fn validate(&self) -> Result<()> {
        require_positive("alpha", self.alpha)?;
        require_positive("beta", self.beta)?;
        require_positive("gamma", self.gamma)?;
        require_positive("delta", self.delta)?;
        require_positive("p", self.p)?;
        require_positive("q", self.q)?;
        if self.q >= self.alpha + self.p {
            return Err(Error::domain(
                "q",
                format!(
                    "need q < alpha + p, got q = {}, alpha + p = {}",
                    self.q,
                    self.alpha + self.p
                ),
            ));
        }
        Ok(())
    }

    /// `ln[(γ)_{qn,k} / (Γ_k(αn + β) (δ)_{pn,k})]`, the log of the n-th coefficient.
    pub fn ln_coefficient(&self, n: usize) -> Result<f64> {
        let k = self.k;
        let kv = k.get();
        let n = n as f64;
        Ok(ln_k_gamma(k, self.gamma + self.q * n * kv)?
            - ln_k_gamma(k, self.gamma)?
            - ln_k_gamma(k, self.alpha * n + self.beta)?
            - ln_k_gamma(k, self.delta + self.p * n * kv)?
            + ln_k_gamma(k, self.delta)?)
    }
}

/// `zⁿ` split as `(n ln|z|, sign)`; `None` when the power vanishes.
pub(crate) fn ln_power(z: f64, n: usize) -> Option<(f64, f64)> {
    if n == 0 {
        return Some((0.0, 1.0));
    }
    if z == 0.0 {
        return None;
    }
    let sign = if z < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    Some((n as f64 * z.abs().ln(), sign))
}

/// `c_n zⁿ`, the n-th term of the k-Mittag-Leffler series.
pub fn ml_term(params: &MLParams, z: f64, n: usize) -> Result<f64> {
    match ln_power(z, n) {
        None => Ok(0.0),
        Some((ln_zn, sign)) => Ok(sign * (ln_zn + params.ln_coefficient(n)?).exp()),
    }
}

/// `E^{γ,δ,q}_{k,α,β,p}(z)` for real `z`.
pub fn ml_k(params: &MLParams, z: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    params.validate()?;
    cfg.validate()?;
    if !z.is_finite() {
        return Err(Error::domain("z", format!("must be finite, got {z}")));
    }
    if z == 0.0 {
        return Ok(SeriesResult::single_term(params.ln_coefficient(0)?.exp()));
    }
    sum_series(|n| ml_term(params, z, n), cfg)
}

/// `E_α(z) = Σ zⁿ / Γ(αn + 1)`.
pub fn ml_classic(alpha: f64, z: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    ml_wiman(alpha, 1.0, z, cfg)
}

/// `E_{α,β}(z) = Σ zⁿ / Γ(αn + β)`.
pub fn ml_wiman(alpha: f64, beta: f64, z: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    ml_prabhakar(alpha, beta, 1.0, z, cfg)
}

/// `E^γ_{α,β}(z) = Σ (γ)_n zⁿ / (Γ(αn + β) n!)`.
pub fn ml_prabhakar(alpha: f64, beta: f64, gamma: f64, z: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    ml_shukla(alpha, beta, gamma, 1.0, z, cfg)
}

/// `E^{γ,q}_{α,β}(z) = Σ (γ)_{qn} zⁿ / (Γ(αn + β) n!)`.
pub fn ml_shukla(alpha: f64, beta: f64, gamma: f64, q: f64, z: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    ml_salim_faraj(alpha, beta, gamma, 1.0, 1.0, q, z, cfg)
}

/// `E^{γ,δ}_{α,β}(z) = Σ (γ)_n zⁿ / (Γ(αn + β) (δ)_n)`.
pub fn ml_salim(alpha: f64, beta: f64, gamma: f64, delta: f64, z: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    ml_salim_faraj(alpha, beta, gamma, delta, 1.0, 1.0, z, cfg)
}

/// `E^{γ,δ,q}_{α,β,p}(z) = Σ (γ)_{qn} zⁿ / (Γ(αn + β) (δ)_{pn})`.
#[allow(clippy::too_many_arguments)]
pub fn ml_salim_faraj(
    alpha: f64,
    beta: f64,
    gamma: f64,
    delta: f64,
    p: f64,
    q: f64,
    z: f64,
    cfg: &SeriesConfig,
) -> Result<SeriesResult> {
    let params = MLParams {
        k: KOrder::ONE,
        alpha,
        beta,
        gamma,
        delta,
        p,
        q,
    };
    ml_k(&params, z, cfg)
}
