//! Batch runner for the zlab verification checks.

pub mod catalogue;
pub mod output;
pub mod suite;

pub use catalogue::{catalogue, find, CheckInfo, GridPoint};
pub use suite::{plan, run_collect, run_suite, Summary, SuiteConfig, DEFAULT_CAP};
