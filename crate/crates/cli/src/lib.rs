//! Command-line front end for the shallow-water vortex benchmark toolkit:
//! configuration layering, CSV emission, and the `profile`, `converge` and
//! `fields` subcommands.

pub mod commands;
pub mod config;
pub mod csv;

pub use commands::{cmd_converge, cmd_fields, cmd_profile, CliError};
pub use config::{ConfigError, RawConfig, Resolved};
pub use csv::{read_csv, write_csv, CsvData};
