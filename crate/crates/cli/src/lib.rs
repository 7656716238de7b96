//! Batch verification driver for `e8kit-core`: named check suites, the
//! dimension ledger and structure-constant export.

pub mod cache;
pub mod emit;
pub mod ledger;
pub mod report;
pub mod suites;
