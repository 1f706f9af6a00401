//! The identity on a general interval `(t, x)`.
//!
//! With `L = x - t` and the substitution `s = t + uL`, term-wise integration
//! of the cutoff exponential gives
//!
//! ```text
//! Σ_r (-A)ʳ/r! Σ_n c_n zⁿ L^{(ρ+μ+nα-2mr)/k - 1} · k · B_k(μ + nα - mr, ρ - mr)
//! ```
//!
//! The printed series carries `… - 2` in the exponent and no `k`; the
//! verifier evaluates both exponents (they differ by one power of `L`) and
//! leaves the factor `k` to the classifier.

use super::params::Theorem2Params;
use super::{
    assemble, kernel_integral, ml_weighted_series, scale_quadrature, ExponentCheck, ExponentConvention, ExponentMatch,
    IdentityId, IdentityReport, RPolicy, RhsSummary, Status, VerifyConfig,
};
use crate::error::{Error, Result};
use crate::ext_beta::ExtBetaParams;
use crate::quadrature::QuadratureResult;
use crate::special::{k_beta_continued, k_gamma, ln_gamma};

/// `∫_t^x (x-s)^{ρ/k-1}(s-t)^{μ/k-1} e^{-A/((x-s)(s-t))^{m/k}} E(z(s-t)^{α/k}) ds`
/// against the `(r, n)` double series truncated per `cfg.r_policy`.
///
/// With `A > 0` the `r`-series is only asymptotic: its remainder is
/// estimated by the first omitted term and the report is
/// [`Status::AsymptoticOnly`] when that estimate exceeds the tolerance band
/// but bounds the actual disagreement.
pub fn verify_theorem_2_2(p: &Theorem2Params, cfg: &VerifyConfig) -> Result<IdentityReport> {
    cfg.validate()?;
    p.validate()?;
    let sides = interval_sides(p, cfg)?;
    Ok(classify(IdentityId::T2_2, p, sides, 1.0, cfg))
}

/// The `A = 0`, `μ = β` case with both sides divided by `Γ_k(ρ)`.
///
/// The printed right-hand side has `Γ_k(αn + β)` where term-wise integration
/// gives `Γ_k(αn + β + ρ)`; it is reported as `printed_rhs` only.
pub fn verify_corollary_2_2(p: &Theorem2Params, cfg: &VerifyConfig) -> Result<IdentityReport> {
    cfg.validate()?;
    p.validate()?;
    if p.cutoff != 0.0 {
        return Err(Error::domain(
            "A",
            format!("corollary requires A = 0, got {}", p.cutoff),
        ));
    }
    if p.mu != p.ml.beta {
        return Err(Error::domain(
            "mu",
            format!("corollary requires mu = beta, got mu = {}, beta = {}", p.mu, p.ml.beta),
        ));
    }
    let scale = 1.0 / k_gamma(p.ml.k, p.rho)?;
    let sides = interval_sides(p, cfg)?;
    let mut report = classify(IdentityId::C2_2, p, sides, scale, cfg);

    let kv = p.ml.k.get();
    let ln_l = p.length().ln();
    let offset = cfg.exponent.offset();
    let (printed, _) = ml_weighted_series(&p.ml, p.z, cfg, |n| {
        let e = (p.rho + p.ml.beta + n as f64 * p.ml.alpha) / kv - offset;
        Ok(((e * ln_l).exp(), true))
    })?;
    report.printed_rhs = Some(printed.value);
    Ok(report)
}

struct IntervalSides {
    lhs: QuadratureResult,
    /// Right-hand side with the `… - 1` exponent.
    rhs: RhsSummary,
    /// Remainder of the asymptotic `r`-series, `None` when `A = 0`.
    remainder: Option<f64>,
}

fn interval_sides(p: &Theorem2Params, cfg: &VerifyConfig) -> Result<IntervalSides> {
    let k = p.ml.k;
    // the weight's left exponent belongs to s - t
    let weight = ExtBetaParams::new(k, p.mu, p.rho, p.cutoff, p.m)?.weight();
    let lhs = kernel_integral(weight, None, &p.ml, p.z, (p.t, p.x), cfg)?;

    if p.cutoff == 0.0 {
        let term = r_term(p, 0, cfg)?;
        let rhs = RhsSummary {
            value: term.value,
            outer_terms: 1,
            inner_terms: term.inner_terms,
            truncation_estimate: term.last_inner_abs,
            converged: term.converged,
        };
        return Ok(IntervalSides {
            lhs,
            rhs,
            remainder: None,
        });
    }

    let in_region = |r: usize| {
        let mr = p.m * r as f64;
        p.mu - mr > 0.0 && p.rho - mr > 0.0
    };
    let mut terms = Vec::new();
    while terms.len() < cfg.rhs.n_max && in_region(terms.len()) {
        terms.push(r_term(p, terms.len(), cfg)?);
    }

    let first_omitted = |r: usize| match r_term(p, r, cfg) {
        Ok(t) if t.value.is_finite() && t.value != 0.0 => t.value.abs(),
        _ => f64::INFINITY,
    };
    let (kept, remainder) = match cfg.r_policy {
        RPolicy::SmallestTerm if terms.len() > 1 => {
            let smallest = (1..terms.len())
                .min_by(|&i, &j| terms[i].value.abs().total_cmp(&terms[j].value.abs()))
                .expect("at least one candidate");
            (smallest, terms[smallest].value.abs())
        }
        _ => (terms.len(), first_omitted(terms.len())),
    };

    let kept_terms = &terms[..kept];
    let rhs = RhsSummary {
        value: kept_terms.iter().map(|t| t.value).sum(),
        outer_terms: kept,
        inner_terms: kept_terms.iter().map(|t| t.inner_terms).sum(),
        truncation_estimate: remainder,
        converged: kept_terms.iter().all(|t| t.converged),
    };
    Ok(IntervalSides {
        lhs,
        rhs,
        remainder: Some(remainder),
    })
}

struct RTerm {
    value: f64,
    inner_terms: usize,
    last_inner_abs: f64,
    converged: bool,
}

/// `(-A)ʳ/r! Σ_n c_n zⁿ L^{(ρ+μ+nα-2mr)/k - 1} B_k(μ + nα - mr, ρ - mr)`.
fn r_term(p: &Theorem2Params, r: usize, cfg: &VerifyConfig) -> Result<RTerm> {
    let k = p.ml.k;
    let kv = k.get();
    let rf = r as f64;
    let mr = p.m * rf;
    let ln_l = p.length().ln();
    let (series, converged) = ml_weighted_series(&p.ml, p.z, cfg, |n| {
        let shifted = p.mu + n as f64 * p.ml.alpha - mr;
        let beta = k_beta_continued(k, shifted, p.rho - mr)?;
        let e = (p.rho + shifted - mr) / kv - 1.0;
        Ok((beta * (e * ln_l).exp(), true))
    })?;
    let outer = if r == 0 {
        1.0
    } else {
        let sign = if r % 2 == 1 { -1.0 } else { 1.0 };
        sign * (rf * p.cutoff.ln() - ln_gamma(rf + 1.0)?).exp()
    };
    Ok(RTerm {
        value: outer * series.value,
        inner_terms: series.terms_used,
        last_inner_abs: (outer * series.last_term_abs).abs(),
        converged: converged && series.converged,
    })
}

/// Classifies the sides under both exponent conventions and reports the
/// configured one. Both sides are multiplied by `scale`.
fn classify(
    id: IdentityId,
    p: &Theorem2Params,
    sides: IntervalSides,
    scale: f64,
    cfg: &VerifyConfig,
) -> IdentityReport {
    let kv = p.ml.k.get();
    let tol = cfg.tolerance_for(id);
    let lhs = scale_quadrature(sides.lhs, scale);
    let per_length = 1.0 / p.length();

    let minus_one = assemble(
        id,
        kv,
        lhs,
        sides.rhs.scaled(scale),
        tol,
        sides.remainder.map(|r| r * scale.abs()),
    );
    let literal = assemble(
        id,
        kv,
        lhs,
        sides.rhs.scaled(scale * per_length),
        tol,
        sides.remainder.map(|r| r * (scale * per_length).abs()),
    );
    let matched = match (literal.status != Status::Failed, minus_one.status != Status::Failed) {
        (true, true) => ExponentMatch::Both,
        (true, false) => ExponentMatch::Literal,
        (false, true) => ExponentMatch::MinusOne,
        (false, false) => ExponentMatch::Neither,
    };
    let check = ExponentCheck {
        convention: cfg.exponent,
        literal_rel_err: literal.rel_err,
        minus_one_rel_err: minus_one.rel_err,
        matched,
    };
    let mut report = match cfg.exponent {
        ExponentConvention::Literal => literal,
        ExponentConvention::MinusOne => minus_one,
    };
    report.exponent = Some(check);
    report
}
