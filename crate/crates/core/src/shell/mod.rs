//! File formats, reference data, reproduction suites and the CLI.

pub mod census;
mod cli;
pub mod dataset;
pub mod harness;
pub mod io;
pub mod report;

pub use cli::run;
pub use io::{emit, load, load_all, load_str, parse_matrices, Convention, LoadError, ParseError};
pub use report::{Check, Report, Status};
