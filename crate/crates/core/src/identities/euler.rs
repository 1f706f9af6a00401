//! Identities over the unit interval.

use super::params::{Theorem1Params, Theorem3Params};
use super::{
    assemble, kernel_integral, ml_weighted_series, scale_quadrature, Binomial, IdentityId, IdentityReport, RhsSummary,
    VerifyConfig,
};
use crate::error::{Error, Result};
use crate::ext_beta::{ext_k_beta, ExtBetaParams};
use crate::mittag_leffler::ln_power;
use crate::quadrature::QuadratureResult;
use crate::series::sum_series;
use crate::special::{k_beta, k_gamma, ln_gamma, ln_k_gamma, ln_k_pochhammer};

/// `∫₀¹ t^{a/k-1}(1-t)^{b/k-1} e^{-A/(t(1-t))^{m/k}} E(z t^{α/k}) dt`
/// against `Σ c_n zⁿ B_k(a + nα, b; A; m)`.
pub fn verify_theorem_2_1(p: &Theorem1Params, cfg: &VerifyConfig) -> Result<IdentityReport> {
    theorem_2_1_as(IdentityId::T2_1, p, cfg)
}

fn theorem_2_1_as(id: IdentityId, p: &Theorem1Params, cfg: &VerifyConfig) -> Result<IdentityReport> {
    cfg.validate()?;
    p.validate()?;
    let lhs = unit_lhs(p, None, cfg)?;
    let k = p.ml.k;
    let (series, inner) = ml_weighted_series(&p.ml, p.z, cfg, |n| {
        let beta = ExtBetaParams::new(k, p.a + n as f64 * p.ml.alpha, p.b, p.cutoff, p.m)?;
        let q = ext_k_beta(&beta, &cfg.quadrature)?;
        Ok((q.value, q.converged))
    })?;
    let rhs = RhsSummary::single(&series, inner);
    Ok(assemble(id, k.get(), lhs, rhs, cfg.tolerance_for(id), None))
}

fn unit_lhs(p: &Theorem1Params, binomial: Option<Binomial>, cfg: &VerifyConfig) -> Result<QuadratureResult> {
    let weight = ExtBetaParams::new(p.ml.k, p.a, p.b, p.cutoff, p.m)?.weight();
    kernel_integral(weight, binomial, &p.ml, p.z, (0.0, 1.0), cfg)
}

/// The `A = 0`, `a = β` case divided by `Γ_k(b)`, against
/// `Σ (γ)_{qn,k} zⁿ / ((δ)_{pn,k} Γ_k(β + b + αn))`.
///
/// The printed series omits the factor `k` between the cutoff integral and
/// the gamma-ratio beta, so for `k ≠ 1` the report is expected to be
/// [`Status::FlaggedFactorK`](super::Status::FlaggedFactorK).
pub fn verify_corollary_2_1(p: &Theorem1Params, cfg: &VerifyConfig) -> Result<IdentityReport> {
    cfg.validate()?;
    p.validate()?;
    if p.cutoff != 0.0 {
        return Err(Error::domain(
            "A",
            format!("corollary requires A = 0, got {}", p.cutoff),
        ));
    }
    if p.a != p.ml.beta {
        return Err(Error::domain(
            "a",
            format!("corollary requires a = beta, got a = {}, beta = {}", p.a, p.ml.beta),
        ));
    }
    let ml = &p.ml;
    let k = ml.k;
    let lhs = scale_quadrature(unit_lhs(p, None, cfg)?, 1.0 / k_gamma(k, p.b)?);
    let series = sum_series(
        |n| {
            let Some((ln_zn, sign)) = ln_power(p.z, n) else {
                return Ok(0.0);
            };
            let nf = n as f64;
            let ln_term = ln_zn + ln_k_pochhammer(k, ml.gamma, ml.q * nf)?
                - ln_k_pochhammer(k, ml.delta, ml.p * nf)?
                - ln_k_gamma(k, ml.beta + p.b + ml.alpha * nf)?;
            Ok(cfg.perturb(n, sign * ln_term.exp()))
        },
        &cfg.rhs,
    )?;
    let id = IdentityId::C2_1;
    let rhs = RhsSummary::single(&series, true);
    Ok(assemble(id, k.get(), lhs, rhs, cfg.tolerance_for(id), None))
}

/// The binomial-weighted identity: kernel `t^{λ/k-1}(1-t)^{(μ-λ)/k-1}`
/// times `(1 - u t^{ρ/k}(1-t)^{σ/k})^{-a}`, against
/// `Σ_r (a)_r uʳ/r! Σ_n c_n zⁿ B_k(λ + nα + ρr, μ - λ + σr; A; m)`.
///
/// When the binomial factor is identically one (`u = 0` or `a = 0`) this
/// runs the unit-interval engine unchanged, so the numbers equal those of
/// [`verify_theorem_2_1`] with `a = λ`, `b = μ - λ`.
pub fn verify_theorem_2_3(p: &Theorem3Params, cfg: &VerifyConfig) -> Result<IdentityReport> {
    p.validate()?;
    let id = IdentityId::T2_3;
    let base = p.without_binomial();
    if p.binomial_is_trivial() {
        return theorem_2_1_as(id, &base, cfg);
    }
    cfg.validate()?;

    let ml = &p.ml;
    let k = ml.k;
    let kv = k.get();
    let binomial = Binomial {
        a_exp: p.a_exp,
        u: p.u,
        rho: p.rho / kv,
        sigma: p.sigma / kv,
    };
    let lhs = unit_lhs(&base, Some(binomial), cfg)?;

    let ln_gamma_a = ln_gamma(p.a_exp)?;
    let ln_u = p.u.abs().ln();
    let mut inner_terms = 0;
    let mut inner_converged = true;
    let outer = sum_series(
        |r| {
            let rf = r as f64;
            let ln_binom = ln_gamma(p.a_exp + rf)? - ln_gamma_a - ln_gamma(rf + 1.0)? + rf * ln_u;
            let sign = if p.u < 0.0 && r % 2 == 1 { -1.0 } else { 1.0 };
            let (series, converged) = ml_weighted_series(ml, p.z, cfg, |n| {
                let nf = n as f64;
                let beta = ExtBetaParams::new(
                    k,
                    p.lambda + nf * ml.alpha + p.rho * rf,
                    p.mu - p.lambda + p.sigma * rf,
                    p.cutoff,
                    p.m,
                )?;
                let q = ext_k_beta(&beta, &cfg.quadrature)?;
                Ok((q.value, q.converged))
            })?;
            inner_terms += series.terms_used;
            inner_converged &= converged && series.converged;
            Ok(sign * ln_binom.exp() * series.value)
        },
        &cfg.rhs,
    )?;
    let rhs = RhsSummary {
        value: outer.value,
        outer_terms: outer.terms_used,
        inner_terms,
        truncation_estimate: outer.last_term_abs,
        converged: outer.converged && inner_converged,
    };
    Ok(assemble(id, kv, lhs, rhs, cfg.tolerance_for(id), None))
}

/// The binomial identity at `a = 0`: the unit-interval engine with
/// `a = λ`, `b = μ - λ`, cutoff beta values on the right.
pub fn verify_corollary_2_3(p: &Theorem3Params, cfg: &VerifyConfig) -> Result<IdentityReport> {
    p.validate()?;
    if p.a_exp != 0.0 {
        return Err(Error::domain(
            "a_exp",
            format!("corollary requires a = 0, got {}", p.a_exp),
        ));
    }
    theorem_2_1_as(IdentityId::C2_3, &p.without_binomial(), cfg)
}

/// The binomial identity at `a = 0`, `A = 0`, against the gamma-ratio series
/// `Σ c_n zⁿ B_k(λ + nα, μ - λ)`. Flags the factor `k` like
/// [`verify_corollary_2_1`].
pub fn verify_corollary_2_4(p: &Theorem3Params, cfg: &VerifyConfig) -> Result<IdentityReport> {
    cfg.validate()?;
    p.validate()?;
    if p.a_exp != 0.0 {
        return Err(Error::domain(
            "a_exp",
            format!("corollary requires a = 0, got {}", p.a_exp),
        ));
    }
    if p.cutoff != 0.0 {
        return Err(Error::domain(
            "A",
            format!("corollary requires A = 0, got {}", p.cutoff),
        ));
    }
    let base = p.without_binomial();
    let k = p.ml.k;
    let lhs = unit_lhs(&base, None, cfg)?;
    let (series, inner) = ml_weighted_series(&p.ml, p.z, cfg, |n| {
        Ok((k_beta(k, base.a + n as f64 * p.ml.alpha, base.b)?, true))
    })?;
    let id = IdentityId::C2_4;
    let rhs = RhsSummary::single(&series, inner);
    Ok(assemble(id, k.get(), lhs, rhs, cfg.tolerance_for(id), None))
}
