//! Problem selection and pipeline execution.

use cnmge::cnmtr::SolverConfig;
use cnmge::problems::{self, Problem};
use cnmge::report::{RunReport, Status};
use cnmge::qge;
use rayon::prelude::*;

/// Default status tolerance for small-scale problems.
pub const SMALL_TOL: f64 = 1e-4;
/// Default status tolerance for large-scale (dimension-scaled) problems.
pub const LARGE_TOL: f64 = 1e-1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Small,
    Large,
    All,
}

/// Catalog problems belonging to a suite, in catalog order. The large suite
/// runs the scalable problems at their default dimension (100).
pub fn suite_problems(suite: Suite) -> Vec<Problem> {
    problems::catalog()
        .into_iter()
        .filter(|p| match suite {
            Suite::Small => !p.is_large_scale(),
            Suite::Large => p.is_large_scale(),
            Suite::All => true,
        })
        .collect()
}

fn default_tol(problem: &Problem) -> f64 {
    if problem.is_large_scale() {
        LARGE_TOL
    } else {
        SMALL_TOL
    }
}

/// One solved problem: its report plus the stationary points found.
pub struct Outcome {
    pub report: RunReport,
    pub points: Vec<Vec<f64>>,
    pub point_values: Vec<f64>,
}

/// Runs the pipeline on one problem. A pipeline error becomes a failed
/// report row rather than an error, so a suite always renders fully.
pub fn run_problem(problem: &Problem, config: &SolverConfig, tol: Option<f64>) -> Outcome {
    let tol = tol.unwrap_or_else(|| default_tol(problem));
    match qge::cnmge_with_tol(problem, config, tol) {
        Ok(result) => Outcome {
            report: result.report,
            points: result
                .stationary_points
                .points
                .iter()
                .map(|p| p.as_slice().to_vec())
                .collect(),
            point_values: result.stationary_points.f_values.clone(),
        },
        Err(_) => Outcome {
            report: RunReport {
                problem: problem.name().to_string(),
                n: problem.dim(),
                f_min: f64::NAN,
                known_min: problem.known_min(),
                x_min_digest: "[]".to_string(),
                stationary_count: 0,
                converged_polish: false,
                f_evals: 0,
                jac_evals: 0,
                wall_seconds: 0.0,
                status: Status::Failed,
            },
            points: Vec::new(),
            point_values: Vec::new(),
        },
    }
}

/// Runs a list of problems, possibly concurrently; the output order follows
/// the input (catalog) order regardless of completion order.
pub fn run_all(problems: &[Problem], config: &SolverConfig, tol: Option<f64>) -> Vec<Outcome> {
    problems
        .par_iter()
        .map(|p| run_problem(p, config, tol))
        .collect()
}

/// Exit code from the aggregated statuses: 0 when every row is solved or
/// solved with an unknown reference, 1 otherwise.
pub fn exit_code(reports: &[RunReport]) -> i32 {
    let all_good = reports
        .iter()
        .all(|r| matches!(r.status, Status::Solved | Status::SolvedUnknownMin));
    i32::from(!all_good)
}
