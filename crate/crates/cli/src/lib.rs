//! Std companion to `modpart`: JSON formats, the decomposition matrix cache
//! and the exhaustive cross-check suites behind the `modpart` binary.

pub mod cache;
pub mod error;
pub mod formats;
pub mod suites;

pub use cache::MatrixStore;
pub use error::{CliError, Result};
pub use formats::{SuiteParams, SuiteReport};
pub use suites::{run_suite, SUITES};
