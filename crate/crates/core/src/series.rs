//! Truncated summation shared by the Mittag-Leffler, Wright and identity
//! engines.

use crate::error::{Error, Result};

/// Truncation controls for a power series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Relative (for |sum| > 1) or absolute stopping tolerance on a term.
    pub tol: f64,
    /// Maximum number of terms summed.
    pub n_max: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { tol: 1e-14, n_max: 600 }
    }
}

impl SeriesConfig {
    pub const MAX_TOL: f64 = 1e-4;
    pub const MIN_TERMS: usize = 8;

    pub fn new(tol: f64, n_max: usize) -> Result<Self> {
        let cfg = SeriesConfig { tol, n_max };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol <= Self::MAX_TOL) {
            return Err(Error::domain(
                "tol",
                format!("series tolerance must lie in (0, 1e-4], got {}", self.tol),
            ));
        }
        if self.n_max < Self::MIN_TERMS {
            return Err(Error::domain(
                "n_max",
                format!("at least {} terms required, got {}", Self::MIN_TERMS, self.n_max),
            ));
        }
        Ok(())
    }
}

/// Outcome of a truncated series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    /// Magnitude of the last term added to `value`.
    pub last_term_abs: f64,
    pub converged: bool,
    /// `|t_n / t_{n-1}|` for the last two terms summed (0 when the last term is 0).
    pub tail_ratio: f64,
    /// Whether the last three term magnitudes were non-increasing. When true
    /// and the tail alternates, `last_term_abs` bounds the truncation error.
    pub tail_decreasing: bool,
}

impl SeriesResult {
    /// Result of a series whose only non-zero term is the first.
    pub fn single_term(value: f64) -> Self {
        SeriesResult {
            value,
            terms_used: 1,
            last_term_abs: value.abs(),
            converged: true,
            tail_ratio: 0.0,
            tail_decreasing: true,
        }
    }
}

/// Sums `term(0) + term(1) + …` until two consecutive terms each satisfy
/// `|t| <= tol * max(1, |partial sum|)`, or `n_max` terms have been used.
pub fn sum_series<F>(mut term: F, cfg: &SeriesConfig) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<f64>,
{
    // identity right-hand sides may truncate below MIN_TERMS on purpose
    if cfg.tol.is_nan() || cfg.tol <= 0.0 || cfg.n_max == 0 {
        return Err(Error::domain(
            "tol",
            format!("need tol > 0 and n_max >= 1, got {} / {}", cfg.tol, cfg.n_max),
        ));
    }
    let mut sum = 0.0;
    let mut history = [f64::INFINITY; 3];
    let mut previous_small = false;

    for n in 0..cfg.n_max {
        let t = term(n)?;
        if !t.is_finite() {
            return Err(Error::domain("series", format!("term {n} is not finite ({t})")));
        }
        sum += t;
        history = [history[1], history[2], t.abs()];

        let small = t.abs() <= cfg.tol * sum.abs().max(1.0);
        if small && previous_small {
            return Ok(finish(sum, n + 1, &history, true));
        }
        previous_small = small;
    }
    Ok(finish(sum, cfg.n_max, &history, false))
}

fn finish(value: f64, terms_used: usize, history: &[f64; 3], converged: bool) -> SeriesResult {
    let [a, b, c] = *history;
    let tail_ratio = if c == 0.0 { 0.0 } else { c / b };
    SeriesResult {
        value,
        terms_used,
        last_term_abs: c,
        converged,
        tail_ratio,
        tail_decreasing: c <= b && b <= a,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_converges() {
        let cfg = SeriesConfig::default();
        let r = sum_series(|n| Ok(0.5f64.powi(n as i32)), &cfg).unwrap();
        assert!(r.converged);
        assert!((r.value - 2.0).abs() < 1e-13);
        assert!(r.last_term_abs <= cfg.tol * r.value.abs().max(1.0));
        assert!((r.tail_ratio - 0.5).abs() < 1e-15);
        assert!(r.tail_decreasing);
    }

    #[test]
    fn single_zero_term_does_not_stop_summation() {
        // term 1 is exactly zero; one small term alone must not stop the sum
        let terms = [1.0, 0.0, 0.5, 0.25, 0.0, 0.0];
        let cfg = SeriesConfig::new(1e-14, 8).unwrap();
        let r = sum_series(|n| Ok(*terms.get(n).unwrap_or(&0.0)), &cfg).unwrap();
        assert!(r.converged);
        assert_eq!(r.value, 1.75);
        assert_eq!(r.terms_used, 6);
    }

    #[test]
    fn exhausting_n_max_reports_no_convergence() {
        let cfg = SeriesConfig::new(1e-14, 8).unwrap();
        let r = sum_series(|_| Ok(1.0), &cfg).unwrap();
        assert!(!r.converged);
        assert_eq!(r.terms_used, 8);
        assert_eq!(r.value, 8.0);
    }

    #[test]
    fn config_is_validated() {
        assert!(SeriesConfig::new(0.0, 100).is_err());
        assert!(SeriesConfig::new(1e-3, 100).is_err());
        assert!(SeriesConfig::new(1e-10, 7).is_err());
        assert!(SeriesConfig::new(1e-4, 8).is_ok());
    }

    #[test]
    fn non_finite_term_is_an_error() {
        let cfg = SeriesConfig::default();
        assert!(sum_series(|n| Ok(if n == 2 { f64::NAN } else { 0.1 }), &cfg).is_err());
    }
}
