//! Command-line front end for `ncomp`: subcommands `lambda`, `bset`,
//! `witness`, `continuity` and `ellipses`, each writing CSV and SVG files
//! whose headers record the seed and tolerances of the run.

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod svg;
pub mod table;

pub use cli::{Cli, Command};
pub use commands::{run, Outcome};
pub use error::{CliError, CliResult};
