use std::fmt;
use std::path::PathBuf;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILED_REPORT: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const FIXTURE: i32 = 3;
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    UnknownFunction(String),
    UnknownIdentity(String),
    MissingParameter(String),
    UnknownParameter(String),
    Domain(kmittag_core::Error),
    FixtureMissing(PathBuf),
    FixtureInvalid(String),
    /// Offending fixture ids.
    FixtureMismatch(Vec<String>),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::FixtureMissing(_) | CliError::FixtureInvalid(_) | CliError::FixtureMismatch(_) => exit::FIXTURE,
            _ => exit::USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::UnknownFunction(tag) => write!(f, "unknown function `{tag}`"),
            CliError::UnknownIdentity(tag) => write!(f, "unknown identity `{tag}`"),
            CliError::MissingParameter(key) => write!(f, "missing parameter `{key}`"),
            CliError::UnknownParameter(key) => write!(f, "parameter `{key}` is not used here"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::FixtureMissing(path) => write!(f, "fixture file not found: {}", path.display()),
            CliError::FixtureInvalid(msg) => write!(f, "fixture file unreadable: {msg}"),
            CliError::FixtureMismatch(ids) => write!(f, "fixtures out of tolerance: {}", ids.join(", ")),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<kmittag_core::Error> for CliError {
    fn from(e: kmittag_core::Error) -> Self {
        CliError::Domain(e)
    }
}
