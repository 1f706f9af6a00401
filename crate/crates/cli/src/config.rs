//! Command-line arguments and the resolved run configuration.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use kmittag_core::identities::{ExponentConvention, RPolicy};

use crate::error::CliError;

pub type ParamMap = BTreeMap<String, f64>;

/// Largest identity tolerance accepted by `--tol`.
pub const MAX_TOL: f64 = 1e-2;
/// Largest grid accepted, in points.
pub const MAX_GRID_POINTS: usize = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "kmittag",
    version,
    about = "Evaluate k-Mittag-Leffler family functions and verify their Euler-type integral identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Identity tolerance (verify), or series/quadrature tolerance (eval).
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write records here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Grid axis `key=start:stop:count`; repeatable, first axis varies slowest.
    #[arg(long = "grid", global = true, value_name = "SPEC")]
    pub grid: Vec<String>,

    /// Fixed parameter `key=value`; repeatable.
    #[arg(long = "param", global = true, value_name = "KEY=VALUE")]
    pub param: Vec<String>,

    /// Truncation of the interval identity's cutoff series.
    #[arg(long, global = true, value_enum)]
    pub rpolicy: Option<RPolicyArg>,

    /// `(x - t)` exponent convention of the interval identity.
    #[arg(long, global = true, value_enum)]
    pub exponent: Option<ExponentArg>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function.
    Eval {
        function: String,
        /// Extra `key=value` parameters.
        params: Vec<String>,
    },
    /// Verify an identity (T2.1 … C2.4, S3.1 … S3.8, remark).
    Verify { identity: String, params: Vec<String> },
    /// Evaluate a function or verify an identity over a grid.
    Sweep { tag: String, params: Vec<String> },
    /// Recompute the frozen fixtures and compare.
    Selftest {
        #[arg(long, value_name = "PATH")]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RPolicyArg {
    #[value(name = "truncate_positive")]
    TruncatePositive,
    #[value(name = "smallest_term")]
    SmallestTerm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExponentArg {
    #[value(name = "literal")]
    Literal,
    #[value(name = "minus1")]
    Minus1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Eval,
    Verify,
    Sweep,
    Selftest,
}

impl CommandKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CommandKind::Eval => "eval",
            CommandKind::Verify => "verify",
            CommandKind::Sweep => "sweep",
            CommandKind::Selftest => "selftest",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridAxis {
    pub key: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridAxis {
    pub fn parse(spec: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("grid `{spec}` is not key=start:stop:count"));
        let (key, range) = spec.split_once('=').ok_or_else(bad)?;
        let parts: Vec<&str> = range.split(':').collect();
        let [start, stop, count] = parts[..] else {
            return Err(bad());
        };
        let axis = GridAxis {
            key: parse_key(key)?,
            start: parse_number(key, start)?,
            stop: parse_number(key, stop)?,
            count: count.trim().parse().map_err(|_| bad())?,
        };
        if axis.count == 0 {
            return Err(CliError::Usage(format!("grid `{spec}` needs count >= 1")));
        }
        Ok(axis)
    }

    /// Evenly spaced values; a single point sits at `start`.
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + i as f64 * step
                }
            })
            .collect()
    }
}

fn parse_key(key: &str) -> Result<String, CliError> {
    let key = key.trim();
    if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(CliError::Usage(format!("invalid parameter name `{key}`")));
    }
    Ok(key.to_string())
}

fn parse_number(key: &str, text: &str) -> Result<f64, CliError> {
    let value: f64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("value `{text}` for `{key}` is not a number")))?;
    if !value.is_finite() {
        return Err(CliError::Usage(format!("value for `{key}` must be finite")));
    }
    Ok(value)
}

pub fn parse_assignment(text: &str) -> Result<(String, f64), CliError> {
    let (key, value) = text
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("parameter `{text}` is not key=value")))?;
    Ok((parse_key(key)?, parse_number(key, value)?))
}

/// A fully parsed invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    /// Function or identity tag; empty for selftest.
    pub tag: String,
    pub parameters: ParamMap,
    pub grid: Vec<GridAxis>,
    pub tol: Option<f64>,
    pub format: Format,
    pub output_path: Option<PathBuf>,
    pub r_policy: Option<RPolicy>,
    pub exponent: Option<ExponentConvention>,
    pub fixtures: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (command, tag, positional, fixtures) = match cli.command {
            Command::Eval { function, params } => (CommandKind::Eval, function, params, None),
            Command::Verify { identity, params } => (CommandKind::Verify, identity, params, None),
            Command::Sweep { tag, params } => (CommandKind::Sweep, tag, params, None),
            Command::Selftest { fixtures } => (CommandKind::Selftest, String::new(), Vec::new(), fixtures),
        };

        let mut parameters = ParamMap::new();
        for text in positional.iter().chain(&cli.param) {
            let (key, value) = parse_assignment(text)?;
            if parameters.insert(key.clone(), value).is_some() {
                return Err(CliError::Usage(format!("parameter `{key}` given twice")));
            }
        }
        let mut grid: Vec<GridAxis> = Vec::new();
        for spec in &cli.grid {
            let axis = GridAxis::parse(spec)?;
            if parameters.contains_key(&axis.key) || grid.iter().any(|a| a.key == axis.key) {
                return Err(CliError::Usage(format!("`{}` is both gridded and fixed", axis.key)));
            }
            grid.push(axis);
        }
        let points = grid.iter().try_fold(1usize, |acc, a| acc.checked_mul(a.count));
        if points.is_none_or(|n| n > MAX_GRID_POINTS) {
            return Err(CliError::Usage(format!("grid exceeds {MAX_GRID_POINTS} points")));
        }
        if command == CommandKind::Sweep && grid.is_empty() {
            return Err(CliError::Usage("sweep needs at least one --grid".into()));
        }
        if let Some(tol) = cli.tol {
            if !(tol > 0.0 && tol <= MAX_TOL) {
                return Err(CliError::Usage(format!("--tol must lie in (0, {MAX_TOL}], got {tol}")));
            }
        }

        Ok(RunConfig {
            command,
            tag,
            parameters,
            grid,
            tol: cli.tol,
            format: cli.format,
            output_path: cli.out,
            r_policy: cli.rpolicy.map(|p| match p {
                RPolicyArg::TruncatePositive => RPolicy::TruncatePositive,
                RPolicyArg::SmallestTerm => RPolicy::SmallestTerm,
            }),
            exponent: cli.exponent.map(|e| match e {
                ExponentArg::Literal => ExponentConvention::Literal,
                ExponentArg::Minus1 => ExponentConvention::MinusOne,
            }),
            fixtures,
        })
    }

    /// Parameter sets of the cartesian grid, first axis slowest, each with
    /// its grid coordinates.
    pub fn points(&self) -> Vec<(ParamMap, Vec<(String, f64)>)> {
        let mut points = vec![(self.parameters.clone(), Vec::new())];
        for axis in &self.grid {
            let values = axis.values();
            points = points
                .into_iter()
                .flat_map(|(params, coords)| {
                    values.iter().map(move |&v| {
                        let mut params = params.clone();
                        params.insert(axis.key.clone(), v);
                        let mut coords = coords.clone();
                        coords.push((axis.key.clone(), v));
                        (params, coords)
                    })
                })
                .collect();
        }
        points
    }
}
