//! Per-problem run reports.

use crate::linalg::Vector;

/// Default absolute tolerance between the found and the reference minimum.
pub const DEFAULT_REPORT_TOL: f64 = 1e-4;

/// Outcome classification of one pipeline run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Reference minimum known and matched within tolerance.
    Solved,
    /// No reference minimum is known for this problem.
    SolvedUnknownMin,
    /// Reference minimum known but missed, or the pipeline failed outright.
    Failed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Solved => "solved",
            Status::SolvedUnknownMin => "solved_unknown_min",
            Status::Failed => "failed",
        }
    }

    /// Classifies a finished run. Box-referenced problems count as solved
    /// whenever the found value does not exceed the reference by more than
    /// the tolerance, since an unconstrained search may go lower.
    pub fn classify(f_min: f64, known_min: Option<f64>, box_reference: bool, tol: f64) -> Status {
        match known_min {
            None => Status::SolvedUnknownMin,
            Some(km) => {
                let ok = if box_reference {
                    f_min <= km + tol
                } else {
                    (f_min - km).abs() <= tol
                };
                if ok {
                    Status::Solved
                } else {
                    Status::Failed
                }
            }
        }
    }
}

/// Outcome of one benchmark run, mirroring one row of the report table.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub problem: String,
    pub n: usize,
    pub f_min: f64,
    pub known_min: Option<f64>,
    /// Short preview of the minimizer coordinates.
    pub x_min_digest: String,
    pub stationary_count: usize,
    pub converged_polish: bool,
    pub f_evals: usize,
    pub jac_evals: usize,
    pub wall_seconds: f64,
    pub status: Status,
}

impl RunReport {
    /// Recomputes the status against a different tolerance.
    pub fn reclassify(&mut self, box_reference: bool, tol: f64) {
        if self.status != Status::Failed || self.known_min.is_some() {
            self.status = Status::classify(self.f_min, self.known_min, box_reference, tol);
        }
    }
}

/// Truncated coordinate preview like `[1.039195, 3.141593, ...]`.
pub fn digest(x: &Vector) -> String {
    const SHOWN: usize = 4;
    let mut parts: Vec<String> = x.iter().take(SHOWN).map(|v| format!("{v:.6}")).collect();
    if x.len() > SHOWN {
        parts.push("...".to_string());
    }
    format!("[{}]", parts.join(", "))
}
