//! Standard-library companion to `power-forge-core`: JSON artifact and
//! report formats, rayon-parallel scans, and the `power-forge` command line.

pub mod cli;
mod error;
pub mod format;
pub mod parallel;

pub use error::CliError;
