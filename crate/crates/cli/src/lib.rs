//! Library side of the `hamdisc` command: instance I/O, reports, DOT export
//! and the command bodies.

pub mod commands;
pub mod dot;
pub mod error;
pub mod instance;
pub mod report;

pub use error::CliError;
