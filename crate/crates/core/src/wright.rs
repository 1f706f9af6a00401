//! The generalized k-Wright function
//!
//! ```text
//! ψ_k(z) = Σ_n  Π_j Γ_k(a_j + n A_j) / Π_j Γ_k(b_j + n B_j) · zⁿ / n!
//! ```
//!
//! with independent numerator and denominator list lengths (the standard
//! Fox-Wright shape). The series is entire when
//! `Δ = Σ B_j/k - Σ A_j/k + 1 > 0`.

use crate::error::{require_positive, Error, Result};
use crate::mittag_leffler::ln_power;
use crate::series::{sum_series, SeriesConfig, SeriesResult};
use crate::special::{ln_gamma, ln_k_gamma, KOrder};

/// Longest gamma-product list accepted on either side.
pub const MAX_PAIRS: usize = 4;

/// A `(offset, slope)` pair contributing `Γ_k(offset + n · slope)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaPair {
    pub offset: f64,
    pub slope: f64,
}

impl GammaPair {
    pub fn new(offset: f64, slope: f64) -> Self {
        GammaPair { offset, slope }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WrightParams {
    pub k: KOrder,
    pub upper: Vec<GammaPair>,
    pub lower: Vec<GammaPair>,
}

impl WrightParams {
    pub fn new(k: KOrder, upper: Vec<GammaPair>, lower: Vec<GammaPair>) -> Result<Self> {
        let params = WrightParams { k, upper, lower };
        params.validate()?;
        Ok(params)
    }

    /// `Δ = Σ B_j/k - Σ A_j/k + 1`.
    pub fn convergence_index(&self) -> f64 {
        let k = self.k.get();
        let lower: f64 = self.lower.iter().map(|p| p.slope / k).sum();
        let upper: f64 = self.upper.iter().map(|p| p.slope / k).sum();
        lower - upper + 1.0
    }

    pub fn validate(&self) -> Result<()> {
        for (name, list) in [("upper", &self.upper), ("lower", &self.lower)] {
            if list.len() > MAX_PAIRS {
                return Err(Error::domain(
                    name,
                    format!("at most {MAX_PAIRS} pairs allowed, got {}", list.len()),
                ));
            }
            for pair in list {
                require_positive(name, pair.offset)?;
                require_positive(name, pair.slope)?;
            }
        }
        let delta = self.convergence_index();
        if delta <= 0.0 {
            return Err(Error::domain(
                "lower",
                format!("convergence index must be > 0, got {delta}"),
            ));
        }
        Ok(())
    }

    fn ln_coefficient(&self, n: usize) -> Result<f64> {
        let nf = n as f64;
        let mut acc = -ln_gamma(nf + 1.0)?;
        for pair in &self.upper {
            acc += ln_k_gamma(self.k, pair.offset + nf * pair.slope)?;
        }
        for pair in &self.lower {
            acc -= ln_k_gamma(self.k, pair.offset + nf * pair.slope)?;
        }
        Ok(acc)
    }
}

/// `ψ_k(z)` for real `z`.
pub fn wright_k(params: &WrightParams, z: f64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    params.validate()?;
    cfg.validate()?;
    if !z.is_finite() {
        return Err(Error::domain("z", format!("must be finite, got {z}")));
    }
    if z == 0.0 {
        return Ok(SeriesResult::single_term(params.ln_coefficient(0)?.exp()));
    }
    sum_series(
        |n| match ln_power(z, n) {
            None => Ok(0.0),
            Some((ln_zn, sign)) => Ok(sign * (ln_zn + params.ln_coefficient(n)?).exp()),
        },
        cfg,
    )
}
