//! k-generalized special functions and numerical verification of Euler-type
//! integral identities for the generalized k-Mittag-Leffler function.
//!
//! * [`special`]: k-gamma, k-beta and k-Pochhammer primitives.
//! * [`quadrature`]: tanh-sinh integration on finite intervals.
//! * [`series`]: truncated summation with a two-small-terms stopping rule.
//! * [`ext_beta`]: the beta family with exponential cutoffs.
//! * [`mittag_leffler`]: the Mittag-Leffler hierarchy up to the k-form.
//! * [`wright`]: the generalized k-Wright function.
//! * [`identities`]: quadrature-versus-series checks of the Euler-type
//!   integral formulas, their corollaries and special cases.
//!
//! All parameters are real; every function is pure.

pub mod error;
pub mod ext_beta;
pub mod identities;
pub mod mittag_leffler;
pub mod quadrature;
pub mod series;
pub mod special;
pub mod wright;

pub use error::{Error, Result};
pub use ext_beta::{chaudhry_beta, ext_k_beta, lee_beta, ExtBetaParams};
pub use mittag_leffler::{ml_classic, ml_k, ml_prabhakar, ml_salim, ml_salim_faraj, ml_shukla, ml_wiman, MLParams};
pub use quadrature::{integrate_interval, integrate_unit, Node, QuadratureConfig, QuadratureResult};
pub use series::{SeriesConfig, SeriesResult};
pub use special::{k_beta, k_gamma, k_pochhammer, log_k_gamma, GammaValue, KOrder};
pub use wright::{wright_k, GammaPair, WrightParams};

/// Version string embedded in every serialized record.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
