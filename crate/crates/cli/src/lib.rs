//! Driver for the `kostant-core` verification suites: subcommand
//! implementations and report formats.

pub mod commands;
pub mod report;
