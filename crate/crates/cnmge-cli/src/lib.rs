//! Benchmark harness: runs the global-optimization pipeline over catalog
//! problems and renders machine-readable reports.

pub mod output;
pub mod runner;
