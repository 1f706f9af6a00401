//! Special cases obtained by pinning Mittag-Leffler parameters, and the
//! reductions to the Salim and Ahmed–Khan families.

use std::fmt;
use std::str::FromStr;

use super::params::{Theorem1Params, Theorem2Params, Theorem3Params};
use super::{verify_theorem_2_1, verify_theorem_2_2, verify_theorem_2_3, IdentityId, IdentityReport, VerifyConfig};
use crate::error::{Error, Result};
use crate::mittag_leffler::MLParams;
use crate::special::KOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialCase {
    S3_1,
    S3_2,
    S3_3,
    S3_4,
    S3_5,
    S3_6,
    S3_7,
    S3_8,
}

/// Parameters of the parent identity a special case pins.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialCaseBase {
    Theorem1(Theorem1Params),
    Theorem2(Theorem2Params),
    Theorem3(Theorem3Params),
}

impl SpecialCaseBase {
    fn ml_mut(&mut self) -> &mut MLParams {
        match self {
            SpecialCaseBase::Theorem1(p) => &mut p.ml,
            SpecialCaseBase::Theorem2(p) => &mut p.ml,
            SpecialCaseBase::Theorem3(p) => &mut p.ml,
        }
    }

    pub fn identity(&self) -> IdentityId {
        match self {
            SpecialCaseBase::Theorem1(_) => IdentityId::T2_1,
            SpecialCaseBase::Theorem2(_) => IdentityId::T2_2,
            SpecialCaseBase::Theorem3(_) => IdentityId::T2_3,
        }
    }

    /// Runs the parent verifier on these parameters as given.
    pub fn verify(&self, cfg: &VerifyConfig) -> Result<IdentityReport> {
        match self {
            SpecialCaseBase::Theorem1(p) => verify_theorem_2_1(p, cfg),
            SpecialCaseBase::Theorem2(p) => verify_theorem_2_2(p, cfg),
            SpecialCaseBase::Theorem3(p) => verify_theorem_2_3(p, cfg),
        }
    }
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 8] = [
        SpecialCase::S3_1,
        SpecialCase::S3_2,
        SpecialCase::S3_3,
        SpecialCase::S3_4,
        SpecialCase::S3_5,
        SpecialCase::S3_6,
        SpecialCase::S3_7,
        SpecialCase::S3_8,
    ];

    pub fn id(self) -> IdentityId {
        match self {
            SpecialCase::S3_1 => IdentityId::S3_1,
            SpecialCase::S3_2 => IdentityId::S3_2,
            SpecialCase::S3_3 => IdentityId::S3_3,
            SpecialCase::S3_4 => IdentityId::S3_4,
            SpecialCase::S3_5 => IdentityId::S3_5,
            SpecialCase::S3_6 => IdentityId::S3_6,
            SpecialCase::S3_7 => IdentityId::S3_7,
            SpecialCase::S3_8 => IdentityId::S3_8,
        }
    }

    pub fn from_id(id: IdentityId) -> Option<Self> {
        SpecialCase::ALL.into_iter().find(|c| c.id() == id)
    }

    pub fn parent(self) -> IdentityId {
        match self {
            SpecialCase::S3_1 | SpecialCase::S3_2 | SpecialCase::S3_3 => IdentityId::T2_1,
            SpecialCase::S3_4 | SpecialCase::S3_5 | SpecialCase::S3_6 => IdentityId::T2_2,
            SpecialCase::S3_7 | SpecialCase::S3_8 => IdentityId::T2_3,
        }
    }

    /// Names of the pinned parameters, all set to 1.
    pub fn pinned(self) -> &'static [&'static str] {
        match self {
            SpecialCase::S3_1 | SpecialCase::S3_4 | SpecialCase::S3_7 => &["gamma", "q"],
            SpecialCase::S3_2 | SpecialCase::S3_5 | SpecialCase::S3_8 => &["alpha", "beta", "gamma", "q"],
            SpecialCase::S3_3 | SpecialCase::S3_6 => &["delta", "p"],
        }
    }

    pub fn pin(self, ml: &mut MLParams) {
        for name in self.pinned() {
            match *name {
                "alpha" => ml.alpha = 1.0,
                "beta" => ml.beta = 1.0,
                "gamma" => ml.gamma = 1.0,
                "delta" => ml.delta = 1.0,
                "p" => ml.p = 1.0,
                "q" => ml.q = 1.0,
                _ => unreachable!("unknown pinned parameter"),
            }
        }
    }
}

impl fmt::Display for SpecialCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id().tag())
    }
}

impl FromStr for SpecialCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id: IdentityId = s.parse()?;
        SpecialCase::from_id(id).ok_or_else(|| Error::domain("identity", format!("`{s}` is not a special case")))
    }
}

/// Pins the case's parameters in `base` and runs the parent verifier.
pub fn verify_special_case(case: SpecialCase, base: &SpecialCaseBase, cfg: &VerifyConfig) -> Result<IdentityReport> {
    if base.identity() != case.parent() {
        return Err(Error::domain(
            "identity",
            format!(
                "{case} pins {} parameters, got {} parameters",
                case.parent(),
                base.identity()
            ),
        ));
    }
    let mut pinned = *base;
    case.pin(pinned.ml_mut());
    let mut report = pinned.verify(cfg)?.retag(case.id());
    report.parent = case.parent();
    Ok(report)
}

fn ml(alpha: f64, beta: f64, gamma: f64, delta: f64, p: f64, q: f64) -> MLParams {
    MLParams {
        k: KOrder::ONE,
        alpha,
        beta,
        gamma,
        delta,
        p,
        q,
    }
}

/// Parameter sets of the reduction family `label` (`salim` or
/// `ahmed_khan`), for each of the three theorems: a `z = 0` case followed by
/// two points with `z ≠ 0`.
fn reduction_grid(label: &'static str) -> Vec<SpecialCaseBase> {
    // Salim fixes p = q = m = 1 and varies δ; Ahmed–Khan fixes δ = p = 1 and varies q, m
    let family = |alpha: f64, beta: f64, gamma: f64, free: f64| match label {
        "salim" => (ml(alpha, beta, gamma, free, 1.0, 1.0), 1.0),
        _ => (ml(alpha, beta, gamma, 1.0, 1.0, 0.5 + free / 4.0), free),
    };
    let points = [
        (1.0, 1.0, 1.0, 1.0, 0.0),
        (1.5, 1.2, 1.1, 1.3, 0.5),
        (0.8, 2.0, 0.7, 2.0, -0.8),
    ];

    let mut grid = Vec::new();
    for &(alpha, beta, gamma, free, z) in &points {
        let (ml, m) = family(alpha, beta, gamma, free);
        grid.push(SpecialCaseBase::Theorem1(Theorem1Params {
            ml,
            a: 1.5,
            b: 2.0,
            m,
            cutoff: 0.5,
            z,
        }));
        grid.push(SpecialCaseBase::Theorem2(Theorem2Params {
            ml,
            rho: 2.0,
            mu: 1.5,
            m,
            cutoff: 0.0,
            z,
            t: 0.0,
            x: 1.0,
        }));
        grid.push(SpecialCaseBase::Theorem3(Theorem3Params {
            ml,
            lambda: 1.0,
            mu: 3.0,
            rho: 1.0,
            sigma: 1.0,
            a_exp: 1.0,
            u: if z == 0.0 { 0.0 } else { 0.4 },
            m,
            cutoff: 0.2,
            z,
        }));
    }
    grid
}

/// Runs the three theorem verifiers at `p = q = k = m = 1` (label `salim`)
/// and at `δ = p = k = 1` (label `ahmed_khan`), on a small fixed grid.
pub fn verify_remark_reductions(cfg: &VerifyConfig) -> Result<Vec<IdentityReport>> {
    remark_cases()
        .into_iter()
        .map(|(label, base)| {
            let mut report = base.verify(cfg)?;
            report.label = Some(label);
            Ok(report)
        })
        .collect()
}

/// The labelled parameter sets run by [`verify_remark_reductions`], in order.
pub fn remark_cases() -> Vec<(&'static str, SpecialCaseBase)> {
    ["salim", "ahmed_khan"]
        .into_iter()
        .flat_map(|label| reduction_grid(label).into_iter().map(move |base| (label, base)))
        .collect()
}
