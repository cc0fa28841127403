//! Command-line front end for `folia-core`: the `.fol` document language,
//! constructors for standard families, and command dispatch.

pub mod catalog;
pub mod commands;
pub mod dsl;
pub mod model;
pub mod report;

pub use commands::run;
