//! Global optimization by continuation Newton methods.
//!
//! The pipeline finds the global minimum of a differentiable function in
//! three deterministic stages:
//!
//! 1. [`cnmtr`] — a continuation Newton solver with trust-region time-step
//!    updating finds one zero of the gradient at a time.
//! 2. [`cnmdt`] — repeated solves under [`deflation`] enumerate stationary
//!    points from four far-apart starts; found roots become poles of the
//!    deflated system, so every solve is pushed toward new ones.
//! 3. [`qge`] — the stationary points seed a quasi-genetic evolution using
//!    pairwise midpoint crossover, and the evolved best point is polished by
//!    a final continuation Newton solve.
//!
//! [`problems`] carries the benchmark catalog with analytic gradients and
//! reference minima; [`report`] the per-run report rows.
//!
//! ```
//! use cnmge::{cnmtr::SolverConfig, problems, qge};
//!
//! let problem = problems::by_name("six-hump-camel", None).unwrap();
//! let result = qge::cnmge(&problem, &SolverConfig::default()).unwrap();
//! assert!((result.f_min - (-1.0316)).abs() < 1e-4);
//! ```

pub mod cnmdt;
pub mod cnmtr;
pub mod deflation;
pub mod error;
pub mod linalg;
pub mod problems;
pub mod qge;
pub mod report;
pub mod system;

pub use error::Error;
pub use linalg::{Matrix, Vector};
