//! Command-line front end for `kmittag-core`: evaluation, identity
//! verification, grid sweeps and the fixture self-test.

pub mod commands;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod record;
pub mod registry;

pub use commands::{execute, run, Output};
pub use config::{Cli, RunConfig};
pub use error::{exit, CliError};
