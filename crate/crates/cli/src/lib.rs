//! Text format, JSON reports and the `radzero` command line.

pub mod app;
pub mod dot;
pub mod dsl;
pub mod report;

pub use app::{run, Outcome, EXIT_INVALID, EXIT_OK, EXIT_REFUSED};
