//! File formats, reports and the command-line front end for `rotint-core`.

pub mod cli;
pub mod formats;
pub mod report;

pub use cli::{execute, CommandResult};
