//! Command-line front end: file format, builtin registry, reports and suites.

pub mod commands;
pub mod format;
pub mod registry;
pub mod report;
pub mod suites;
