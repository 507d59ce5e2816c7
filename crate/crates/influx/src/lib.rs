//! File formats, reports and the command-line pipeline for `influx-core`.

pub mod cli;
pub mod config;
pub mod error;
pub mod io;
pub mod pipeline;
pub mod plot;
pub mod report;

pub use error::{Error, Result};
