//! Command-line front end: operator parsing, reports and subcommands.

pub mod commands;
pub mod parse;
pub mod report;
