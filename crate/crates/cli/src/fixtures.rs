//! Frozen reference values and the self-test that recomputes them.

use std::path::{Path, PathBuf};

use kmittag_core::identities::{IdentityId, VerifyConfig};
use serde::{Deserialize, Serialize};

use crate::config::ParamMap;
use crate::error::CliError;
use crate::registry::{evaluate, verify, Function, IdentityTag};

/// Pass threshold on the relative deviation of every fixture.
pub const SELFTEST_TOL: f64 = 1e-8;

/// Fixture file shipped with the repository.
pub fn default_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/derived.json")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub id: String,
    /// Function name, or identity tag for which both sides are compared.
    pub function: String,
    pub parameters: ParamMap,
    pub value: f64,
    pub oracle_description: String,
}

pub fn load(path: &Path) -> Result<Vec<Fixture>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => CliError::FixtureMissing(path.to_path_buf()),
        _ => CliError::FixtureInvalid(format!("{}: {e}", path.display())),
    })?;
    let fixtures: Vec<Fixture> =
        serde_json::from_str(&text).map_err(|e| CliError::FixtureInvalid(format!("{}: {e}", path.display())))?;
    if fixtures.is_empty() {
        return Err(CliError::FixtureInvalid(format!("{}: no fixtures", path.display())));
    }
    Ok(fixtures)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixtureCheck {
    pub id: String,
    pub function: String,
    pub expected: f64,
    /// Recomputed value; for identities, the side farther from `expected`.
    pub computed: f64,
    pub rel_deviation: f64,
}

impl FixtureCheck {
    pub fn passed(&self) -> bool {
        self.rel_deviation <= SELFTEST_TOL
    }
}

fn rel(got: f64, want: f64) -> f64 {
    let d = (got - want).abs() / want.abs().max(f64::MIN_POSITIVE);
    if d.is_nan() {
        f64::INFINITY
    } else {
        d
    }
}

/// Recomputes one fixture with this build.
pub fn check(fixture: &Fixture) -> Result<FixtureCheck, CliError> {
    let computed = if let Ok(function) = fixture.function.parse::<Function>() {
        evaluate(function, &fixture.parameters, None)?.0
    } else if let Ok(id) = fixture.function.parse::<IdentityId>() {
        let reports = verify(IdentityTag::Single(id), &fixture.parameters, &VerifyConfig::default())?;
        let report = &reports[0].0;
        [report.lhs.value, report.rhs.value]
            .into_iter()
            .max_by(|a, b| rel(*a, fixture.value).total_cmp(&rel(*b, fixture.value)))
            .expect("two sides")
    } else {
        return Err(CliError::FixtureInvalid(format!(
            "{}: unknown function `{}`",
            fixture.id, fixture.function
        )));
    };
    Ok(FixtureCheck {
        id: fixture.id.clone(),
        function: fixture.function.clone(),
        expected: fixture.value,
        computed,
        rel_deviation: rel(computed, fixture.value),
    })
}
