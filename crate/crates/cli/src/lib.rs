//! Command-line front end: expression parsing, JSON formats and subcommands.

pub mod commands;
pub mod error;
pub mod expr;
pub mod matrix;
pub mod serial;

pub use error::CliError;
