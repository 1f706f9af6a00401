//! Independent oracles shared by the integration tests: brute-force midpoint
//! sums and direct series built on statrs gamma functions.

#![allow(dead_code)]

use libm::tgamma;
use statrs::function::gamma::ln_gamma;

pub const PANELS: usize = 10_000_000;

/// Midpoint rule on (0, 1) with Neumaier summation.
pub fn midpoint(f: impl Fn(f64) -> f64) -> f64 {
    let h = 1.0 / PANELS as f64;
    let (mut sum, mut comp) = (0.0_f64, 0.0_f64);
    for i in 0..PANELS {
        let v = f((i as f64 + 0.5) * h);
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    (sum + comp) * h
}

pub fn cutoff_beta(x: f64, y: f64, a: f64, m: f64) -> f64 {
    midpoint(|t| {
        let s = t * (1.0 - t);
        t.powf(x - 1.0) * (1.0 - t).powf(y - 1.0) * (-a / s.powf(m)).exp()
    })
}

pub fn ln_gamma_k(k: f64, x: f64) -> f64 {
    (x / k - 1.0) * k.ln() + ln_gamma(x / k)
}

/// `Σ (γ)_{qn,k} zⁿ / (Γ_k(αn+β) (δ)_{pn,k})` over a fixed number of terms.
///
/// At `k = 1` the gammas come from `libm::tgamma`: the alternating sums at
/// `z = -2` cancel by two orders of magnitude, and statrs gamma rounding
/// (up to ~1e-13 relative) then exceeds 1e-12.
#[allow(clippy::too_many_arguments)]
pub fn ml_sum(k: f64, alpha: f64, beta: f64, g: f64, d: f64, p: f64, q: f64, z: f64, terms: usize) -> f64 {
    neumaier((0..terms).map(|n| {
        let n = n as f64;
        let args = [g + q * n * k, alpha * n + beta, d + p * n * k];
        let c = if k == 1.0 && args.iter().all(|&a| a < 170.0) {
            tgamma(args[0]) / tgamma(g) / tgamma(args[1]) / (tgamma(args[2]) / tgamma(d))
        } else {
            (ln_gamma_k(k, args[0]) - ln_gamma_k(k, g) - ln_gamma_k(k, args[1]) - ln_gamma_k(k, args[2])
                + ln_gamma_k(k, d))
            .exp()
        };
        c * z.powi(n as i32)
    }))
}

/// Compensated sum.
pub fn neumaier(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut comp) = (0.0_f64, 0.0_f64);
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// `Σ Π Γ_k(a + nA) / Π Γ_k(b + nB) zⁿ/n!`.
pub fn wright_sum(k: f64, upper: &[(f64, f64)], lower: &[(f64, f64)], z: f64, terms: usize) -> f64 {
    (0..terms)
        .map(|n| {
            let nf = n as f64;
            let ln = upper.iter().map(|&(a, s)| ln_gamma_k(k, a + nf * s)).sum::<f64>()
                - lower.iter().map(|&(b, s)| ln_gamma_k(k, b + nf * s)).sum::<f64>()
                - ln_gamma(nf + 1.0);
            ln.exp() * z.powi(n as i32)
        })
        .sum()
}

pub fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}
