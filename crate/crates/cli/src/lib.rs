//! Batch front end for `arf-core`: field specs, element expressions, form
//! files, verb dispatch and the self-test suite.

pub mod commands;
pub mod error;
pub mod expr;
pub mod field_spec;
pub mod form_file;
pub mod report;
pub mod selftest;

pub use commands::{run, Command, Verb};
pub use error::{CliError, Result};
pub use report::{Format, Report};
