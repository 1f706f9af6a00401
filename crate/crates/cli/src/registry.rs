//! Tag dispatch: maps function and identity names plus a parameter map onto
//! library calls.

use std::collections::BTreeSet;
use std::str::FromStr;

use kmittag_core::identities::{
    remark_cases, verify_corollary_2_1, verify_corollary_2_2, verify_corollary_2_3, verify_corollary_2_4,
    verify_special_case, verify_theorem_2_1, verify_theorem_2_2, verify_theorem_2_3, IdentityId, IdentityReport,
    SpecialCase, SpecialCaseBase, Theorem1Params, Theorem2Params, Theorem3Params, VerifyConfig,
};
use kmittag_core::special::{k_beta, k_gamma, k_pochhammer};
use kmittag_core::wright::MAX_PAIRS;
use kmittag_core::{
    chaudhry_beta, ext_k_beta, lee_beta, ml_classic, ml_k, ml_prabhakar, ml_salim, ml_salim_faraj, ml_shukla, ml_wiman,
    wright_k, ExtBetaParams, GammaPair, KOrder, MLParams, QuadratureConfig, QuadratureResult, SeriesConfig,
    SeriesResult, WrightParams,
};

use crate::config::ParamMap;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    KGamma,
    KBeta,
    KPochhammer,
    ExtKBeta,
    ChaudhryBeta,
    LeeBeta,
    MlK,
    MlClassic,
    MlWiman,
    MlPrabhakar,
    MlShukla,
    MlSalim,
    MlSalimFaraj,
    WrightK,
}

impl Function {
    pub const ALL: [Function; 14] = [
        Function::KGamma,
        Function::KBeta,
        Function::KPochhammer,
        Function::ExtKBeta,
        Function::ChaudhryBeta,
        Function::LeeBeta,
        Function::MlK,
        Function::MlClassic,
        Function::MlWiman,
        Function::MlPrabhakar,
        Function::MlShukla,
        Function::MlSalim,
        Function::MlSalimFaraj,
        Function::WrightK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Function::KGamma => "k_gamma",
            Function::KBeta => "k_beta",
            Function::KPochhammer => "k_pochhammer",
            Function::ExtKBeta => "ext_k_beta",
            Function::ChaudhryBeta => "chaudhry_beta",
            Function::LeeBeta => "lee_beta",
            Function::MlK => "ml_k",
            Function::MlClassic => "ml_classic",
            Function::MlWiman => "ml_wiman",
            Function::MlPrabhakar => "ml_prabhakar",
            Function::MlShukla => "ml_shukla",
            Function::MlSalim => "ml_salim",
            Function::MlSalimFaraj => "ml_salim_faraj",
            Function::WrightK => "wright_k",
        }
    }
}

impl FromStr for Function {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Function::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| CliError::UnknownFunction(s.to_string()))
    }
}

/// An identity tag accepted by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityTag {
    Single(IdentityId),
    Remark,
}

impl FromStr for IdentityTag {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s.eq_ignore_ascii_case("remark") {
            return Ok(IdentityTag::Remark);
        }
        s.parse::<IdentityId>()
            .map(IdentityTag::Single)
            .map_err(|_| CliError::UnknownIdentity(s.to_string()))
    }
}

/// Reads parameters out of a map, tracking which keys were consumed and the
/// resolved values (including defaults and pinned values).
pub struct Args<'a> {
    map: &'a ParamMap,
    used: BTreeSet<String>,
    resolved: ParamMap,
}

impl<'a> Args<'a> {
    pub fn new(map: &'a ParamMap) -> Self {
        Args {
            map,
            used: BTreeSet::new(),
            resolved: ParamMap::new(),
        }
    }

    fn take(&mut self, key: &str) -> Option<f64> {
        let v = self.map.get(key).copied();
        if let Some(v) = v {
            self.used.insert(key.to_string());
            self.resolved.insert(key.to_string(), v);
        }
        v
    }

    pub fn req(&mut self, key: &str) -> Result<f64, CliError> {
        self.take(key)
            .ok_or_else(|| CliError::MissingParameter(key.to_string()))
    }

    pub fn or(&mut self, key: &str, default: f64) -> f64 {
        self.take(key).unwrap_or_else(|| {
            self.resolved.insert(key.to_string(), default);
            default
        })
    }

    /// A parameter fixed by the operation; if given it must equal `value`.
    pub fn pinned(&mut self, key: &str, value: f64) -> Result<f64, CliError> {
        if let Some(given) = self.take(key) {
            if given != value {
                return Err(CliError::Domain(kmittag_core::Error::Domain {
                    param: "pinned",
                    reason: format!("`{key}` is fixed to {value} here, got {given}"),
                }));
            }
        }
        self.resolved.insert(key.to_string(), value);
        Ok(value)
    }

    fn count(&mut self, key: &str) -> Result<Option<usize>, CliError> {
        match self.take(key) {
            None => Ok(None),
            Some(v) if v >= 1.0 && v.fract() == 0.0 && v <= 1e9 => Ok(Some(v as usize)),
            Some(v) => Err(CliError::Usage(format!("`{key}` must be a positive integer, got {v}"))),
        }
    }

    fn k(&mut self) -> Result<KOrder, CliError> {
        Ok(KOrder::new(self.req("k")?)?)
    }

    /// Errors on any key not consumed; returns the resolved parameters.
    pub fn finish(self) -> Result<ParamMap, CliError> {
        if let Some(key) = self.map.keys().find(|k| !self.used.contains(*k)) {
            return Err(CliError::UnknownParameter(key.clone()));
        }
        Ok(self.resolved)
    }
}

/// Diagnostics attached to an evaluated value.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Diagnostics {
    pub converged: bool,
    pub terms_used: Option<usize>,
    pub evaluations: Option<usize>,
    /// Last series term magnitude, or the quadrature error estimate.
    pub error_estimate: Option<f64>,
}

fn from_series(r: SeriesResult) -> (f64, Diagnostics) {
    (
        r.value,
        Diagnostics {
            converged: r.converged,
            terms_used: Some(r.terms_used),
            evaluations: None,
            error_estimate: Some(r.last_term_abs),
        },
    )
}

fn from_quadrature(r: QuadratureResult) -> (f64, Diagnostics) {
    (
        r.value,
        Diagnostics {
            converged: r.converged,
            terms_used: None,
            evaluations: Some(r.evaluations),
            error_estimate: Some(r.abs_error_estimate),
        },
    )
}

fn exact(value: f64) -> (f64, Diagnostics) {
    (
        value,
        Diagnostics {
            converged: true,
            ..Diagnostics::default()
        },
    )
}

fn series_config(args: &mut Args, tol: Option<f64>) -> Result<SeriesConfig, CliError> {
    let mut cfg = SeriesConfig::default();
    if let Some(t) = args.take("series_tol").or(tol) {
        cfg.tol = t;
    }
    if let Some(n) = args.count("n_max")? {
        cfg.n_max = n;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn quadrature_config(args: &mut Args, tol: Option<f64>) -> Result<QuadratureConfig, CliError> {
    let mut cfg = QuadratureConfig::default();
    if let Some(t) = args.take("rel_tol").or(tol) {
        cfg.rel_tol = t;
    }
    if let Some(t) = args.take("abs_tol") {
        cfg.abs_tol = t;
    }
    if let Some(n) = args.count("max_levels")? {
        cfg.max_levels = u32::try_from(n).map_err(|_| CliError::Usage("max_levels too large".into()))?;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Evaluates `function` on `params`; `tol`, when given, tightens or loosens
/// the series and quadrature stopping rules.
pub fn evaluate(
    function: Function,
    params: &ParamMap,
    tol: Option<f64>,
) -> Result<(f64, Diagnostics, ParamMap), CliError> {
    let mut a = Args::new(params);
    let (value, diag) = match function {
        Function::KGamma => {
            let k = a.k()?;
            exact(k_gamma(k, a.req("z")?)?)
        }
        Function::KBeta => {
            let k = a.k()?;
            exact(k_beta(k, a.req("x")?, a.req("y")?)?)
        }
        Function::KPochhammer => {
            let k = a.k()?;
            exact(k_pochhammer(k, a.req("x")?, a.req("r")?)?)
        }
        Function::ExtKBeta => {
            let p = ExtBetaParams::new(a.k()?, a.req("x")?, a.req("y")?, a.req("A")?, a.req("m")?)?;
            from_quadrature(ext_k_beta(&p, &quadrature_config(&mut a, tol)?)?)
        }
        Function::ChaudhryBeta => {
            let (x, y, s) = (a.req("x")?, a.req("y")?, a.req("sigma")?);
            from_quadrature(chaudhry_beta(x, y, s, &quadrature_config(&mut a, tol)?)?)
        }
        Function::LeeBeta => {
            let (x, y, p, m) = (a.req("x")?, a.req("y")?, a.req("p")?, a.req("m")?);
            from_quadrature(lee_beta(x, y, p, m, &quadrature_config(&mut a, tol)?)?)
        }
        Function::MlK => {
            let p = ml_params(&mut a, &[])?;
            let z = a.req("z")?;
            from_series(ml_k(&p, z, &series_config(&mut a, tol)?)?)
        }
        Function::MlClassic => {
            let (alpha, z) = (a.req("alpha")?, a.req("z")?);
            from_series(ml_classic(alpha, z, &series_config(&mut a, tol)?)?)
        }
        Function::MlWiman => {
            let (alpha, beta, z) = (a.req("alpha")?, a.req("beta")?, a.req("z")?);
            from_series(ml_wiman(alpha, beta, z, &series_config(&mut a, tol)?)?)
        }
        Function::MlPrabhakar => {
            let (alpha, beta, gamma, z) = (a.req("alpha")?, a.req("beta")?, a.req("gamma")?, a.req("z")?);
            from_series(ml_prabhakar(alpha, beta, gamma, z, &series_config(&mut a, tol)?)?)
        }
        Function::MlShukla => {
            let (alpha, beta, gamma, q) = (a.req("alpha")?, a.req("beta")?, a.req("gamma")?, a.req("q")?);
            let z = a.req("z")?;
            from_series(ml_shukla(alpha, beta, gamma, q, z, &series_config(&mut a, tol)?)?)
        }
        Function::MlSalim => {
            let (alpha, beta, gamma, delta) = (a.req("alpha")?, a.req("beta")?, a.req("gamma")?, a.req("delta")?);
            let z = a.req("z")?;
            from_series(ml_salim(alpha, beta, gamma, delta, z, &series_config(&mut a, tol)?)?)
        }
        Function::MlSalimFaraj => {
            let (alpha, beta, gamma, delta) = (a.req("alpha")?, a.req("beta")?, a.req("gamma")?, a.req("delta")?);
            let (p, q, z) = (a.req("p")?, a.req("q")?, a.req("z")?);
            from_series(ml_salim_faraj(
                alpha,
                beta,
                gamma,
                delta,
                p,
                q,
                z,
                &series_config(&mut a, tol)?,
            )?)
        }
        Function::WrightK => {
            let k = a.k()?;
            let upper = gamma_pairs(&mut a, "a", "A")?;
            let lower = gamma_pairs(&mut a, "b", "B")?;
            let p = WrightParams::new(k, upper, lower)?;
            let z = a.req("z")?;
            from_series(wright_k(&p, z, &series_config(&mut a, tol)?)?)
        }
    };
    Ok((value, diag, a.finish()?))
}

/// Reads `offset1, slope1, offset2, …` until the next index is absent.
fn gamma_pairs(a: &mut Args, offset: &str, slope: &str) -> Result<Vec<GammaPair>, CliError> {
    let mut pairs = Vec::new();
    for i in 1..=MAX_PAIRS + 1 {
        let (ko, ks) = (format!("{offset}{i}"), format!("{slope}{i}"));
        match (a.map.contains_key(&ko), a.map.contains_key(&ks)) {
            (false, false) => break,
            _ => pairs.push(GammaPair::new(a.req(&ko)?, a.req(&ks)?)),
        }
    }
    Ok(pairs)
}

const ML_KEYS: [&str; 7] = ["k", "alpha", "beta", "gamma", "delta", "p", "q"];

/// Reads the Mittag-Leffler parameters, fixing the `pinned` ones to 1.
fn ml_params(a: &mut Args, pinned: &[&str]) -> Result<MLParams, CliError> {
    let mut values = [0.0; 7];
    for (slot, key) in values.iter_mut().zip(ML_KEYS) {
        *slot = if pinned.contains(&key) {
            a.pinned(key, 1.0)?
        } else {
            a.req(key)?
        };
    }
    let [k, alpha, beta, gamma, delta, p, q] = values;
    Ok(MLParams::new(KOrder::new(k)?, alpha, beta, gamma, delta, p, q)?)
}

fn theorem1(a: &mut Args, pinned: &[&str]) -> Result<Theorem1Params, CliError> {
    let ml = ml_params(a, pinned)?;
    Ok(Theorem1Params {
        ml,
        a: a.req("a")?,
        b: a.req("b")?,
        m: a.req("m")?,
        cutoff: a.req("A")?,
        z: a.req("z")?,
    })
}

fn theorem2(a: &mut Args, pinned: &[&str]) -> Result<Theorem2Params, CliError> {
    let ml = ml_params(a, pinned)?;
    Ok(Theorem2Params {
        ml,
        rho: a.req("rho")?,
        mu: a.req("mu")?,
        m: a.req("m")?,
        cutoff: a.req("A")?,
        z: a.req("z")?,
        t: a.req("t")?,
        x: a.req("x")?,
    })
}

fn theorem3(a: &mut Args, pinned: &[&str]) -> Result<Theorem3Params, CliError> {
    let ml = ml_params(a, pinned)?;
    Ok(Theorem3Params {
        ml,
        lambda: a.req("lambda")?,
        mu: a.req("mu")?,
        rho: a.req("rho")?,
        sigma: a.req("sigma")?,
        a_exp: a.req("a_exp")?,
        u: a.req("u")?,
        m: a.req("m")?,
        cutoff: a.req("A")?,
        z: a.req("z")?,
    })
}

/// The binomial-identity parameters when the binomial factor is switched off:
/// `rho`, `sigma`, `u` are then irrelevant and default to 1, 1, 0.
fn theorem3_without_binomial(a: &mut Args, cutoff: Option<f64>) -> Result<Theorem3Params, CliError> {
    let ml = ml_params(a, &[])?;
    Ok(Theorem3Params {
        ml,
        lambda: a.req("lambda")?,
        mu: a.req("mu")?,
        rho: a.or("rho", 1.0),
        sigma: a.or("sigma", 1.0),
        a_exp: a.pinned("a_exp", 0.0)?,
        u: a.or("u", 0.0),
        m: a.req("m")?,
        cutoff: match cutoff {
            Some(v) => a.pinned("A", v)?,
            None => a.req("A")?,
        },
        z: a.req("z")?,
    })
}

/// Builds the verifier configuration from CLI-level settings and the
/// control keys `n_max`, `rhs_tol`, `kernel_tol`, `kernel_n_max`, `max_levels`.
fn verify_config(a: &mut Args, base: &VerifyConfig) -> Result<VerifyConfig, CliError> {
    let mut cfg = *base;
    if let Some(n) = a.count("n_max")? {
        cfg.rhs.n_max = n;
    }
    if let Some(t) = a.take("rhs_tol") {
        cfg.rhs.tol = t;
    }
    if let Some(n) = a.count("kernel_n_max")? {
        cfg.kernel.n_max = n;
    }
    if let Some(t) = a.take("kernel_tol") {
        cfg.kernel.tol = t;
    }
    if let Some(n) = a.count("max_levels")? {
        cfg.quadrature.max_levels = u32::try_from(n).map_err(|_| CliError::Usage("max_levels too large".into()))?;
    }
    Ok(cfg)
}

/// One verified grid point: its reports with their resolved parameters.
pub type Verified = Vec<(IdentityReport, ParamMap)>;

pub fn verify(tag: IdentityTag, params: &ParamMap, base: &VerifyConfig) -> Result<Verified, CliError> {
    let mut a = Args::new(params);
    let cfg = verify_config(&mut a, base)?;
    let id = match tag {
        IdentityTag::Remark => {
            a.finish()?;
            return remark_cases()
                .into_iter()
                .map(|(label, case)| {
                    let mut report = case.verify(&cfg)?;
                    report.label = Some(label);
                    Ok((report, base_params(&case)))
                })
                .collect();
        }
        IdentityTag::Single(id) => id,
    };
    let report = match id {
        IdentityId::T2_1 => verify_theorem_2_1(&theorem1(&mut a, &[])?, &cfg)?,
        IdentityId::C2_1 => {
            let ml = ml_params(&mut a, &[])?;
            let p = Theorem1Params {
                ml,
                a: a.pinned("a", ml.beta)?,
                b: a.req("b")?,
                m: a.or("m", 1.0),
                cutoff: a.pinned("A", 0.0)?,
                z: a.req("z")?,
            };
            verify_corollary_2_1(&p, &cfg)?
        }
        IdentityId::T2_2 => verify_theorem_2_2(&theorem2(&mut a, &[])?, &cfg)?,
        IdentityId::C2_2 => {
            let ml = ml_params(&mut a, &[])?;
            let p = Theorem2Params {
                ml,
                rho: a.req("rho")?,
                mu: a.pinned("mu", ml.beta)?,
                m: a.or("m", 1.0),
                cutoff: a.pinned("A", 0.0)?,
                z: a.req("z")?,
                t: a.req("t")?,
                x: a.req("x")?,
            };
            verify_corollary_2_2(&p, &cfg)?
        }
        IdentityId::T2_3 => verify_theorem_2_3(&theorem3(&mut a, &[])?, &cfg)?,
        IdentityId::C2_3 => verify_corollary_2_3(&theorem3_without_binomial(&mut a, None)?, &cfg)?,
        IdentityId::C2_4 => verify_corollary_2_4(&theorem3_without_binomial(&mut a, Some(0.0))?, &cfg)?,
        special => {
            let case = SpecialCase::from_id(special).expect("remaining tags are special cases");
            let pins = case.pinned();
            let base = match case.parent() {
                IdentityId::T2_1 => SpecialCaseBase::Theorem1(theorem1(&mut a, pins)?),
                IdentityId::T2_2 => SpecialCaseBase::Theorem2(theorem2(&mut a, pins)?),
                _ => SpecialCaseBase::Theorem3(theorem3(&mut a, pins)?),
            };
            verify_special_case(case, &base, &cfg)?
        }
    };
    Ok(vec![(report, a.finish()?)])
}

/// The parameter map that reproduces `base` through [`verify`].
pub fn base_params(base: &SpecialCaseBase) -> ParamMap {
    let ml = match base {
        SpecialCaseBase::Theorem1(p) => p.ml,
        SpecialCaseBase::Theorem2(p) => p.ml,
        SpecialCaseBase::Theorem3(p) => p.ml,
    };
    let mut map: ParamMap = ML_KEYS
        .into_iter()
        .zip([ml.k.get(), ml.alpha, ml.beta, ml.gamma, ml.delta, ml.p, ml.q])
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    let extra: Vec<(&str, f64)> = match base {
        SpecialCaseBase::Theorem1(p) => vec![("a", p.a), ("b", p.b), ("m", p.m), ("A", p.cutoff), ("z", p.z)],
        SpecialCaseBase::Theorem2(p) => vec![
            ("rho", p.rho),
            ("mu", p.mu),
            ("m", p.m),
            ("A", p.cutoff),
            ("z", p.z),
            ("t", p.t),
            ("x", p.x),
        ],
        SpecialCaseBase::Theorem3(p) => vec![
            ("lambda", p.lambda),
            ("mu", p.mu),
            ("rho", p.rho),
            ("sigma", p.sigma),
            ("a_exp", p.a_exp),
            ("u", p.u),
            ("m", p.m),
            ("A", p.cutoff),
            ("z", p.z),
        ],
    };
    map.extend(extra.into_iter().map(|(k, v)| (k.to_string(), v)));
    map
}
