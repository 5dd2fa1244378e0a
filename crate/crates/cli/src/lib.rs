//! Batch front end for `gapset-core`: counting tables, listings, and the
//! verification suites, with text, CSV and JSON output.

pub mod commands;
pub mod config;
pub mod emit;
pub mod golden;
pub mod parallel;

pub use commands::{run, Outcome};
pub use config::{Cli, Format, RunConfig};
