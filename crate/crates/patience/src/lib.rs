//! Command-line companion to `patience-core`: JSON, DOT and CSV output,
//! table reproduction and parallel diameters.

pub mod config;
pub mod dot;
pub mod json;
pub mod parallel;
pub mod scan;
pub mod tables;

pub use config::{OutputFormat, RunConfig};
pub use patience_core as core;
