//! Command-line front end for `nilschur`: algebra files, analysis reports
//! and batch runs.
//!
//! Exit codes: 0 success, 1 bad input, 2 a failed internal check.

pub mod app;
pub mod error;
pub mod file;
pub mod report;

pub use app::{run, Cli};
pub use error::{CliError, EXIT_INPUT, EXIT_INTERNAL, EXIT_OK};
