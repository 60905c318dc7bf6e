//! Command-line front end for `warmgray-core`.
//!
//! The binary lives in `main.rs`; everything it does is reachable from here
//! so the acceptance suite can drive the same code paths in process.

pub mod bench;
pub mod codec;
pub mod commands;
pub mod error;
pub mod report;

pub use bench::{BenchConfig, BenchResult};
pub use commands::Cli;
pub use error::CliError;
