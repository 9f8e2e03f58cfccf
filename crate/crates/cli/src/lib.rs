//! Command-line front end: catalog-file parsing, the subcommands and their reports.

pub mod commands;
pub mod error;
pub mod output;
pub mod spec;
