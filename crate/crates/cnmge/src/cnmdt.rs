//! Enumeration of stationary points: repeated continuation Newton solves
//! under deflation from four far-apart deterministic starts.
//!
//! Each start keeps solving the growing deflated system until a solve fails
//! (non-convergence, singular Jacobian, duplicate, pole at the start or a
//! candidate whose raw gradient is not small). The deflation registry is
//! shared across starts, so later starts only contribute new points.

use crate::cnmtr::{self, SolverConfig};
use crate::error::Error;
use crate::linalg::{inf_norm, Vector};
use crate::problems::Problem;

/// Stationary points found for one problem, with their objective values and
/// raw gradient residuals.
#[derive(Debug, Clone, Default)]
pub struct StationaryPointSet {
    pub points: Vec<Vector>,
    pub f_values: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Index of the start (0..4) whose solve chain produced each point.
    pub origin_start: Vec<usize>,
}

impl StationaryPointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of the point with the smallest objective value.
    pub fn min_f_index(&self) -> Option<usize> {
        (0..self.f_values.len()).min_by(|&a, &b| {
            self.f_values[a]
                .partial_cmp(&self.f_values[b])
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    }
}

/// Evaluation counters accumulated over every solve of an enumeration.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveStats {
    pub f_evals: usize,
    pub jac_evals: usize,
    pub solves: usize,
}

impl SolveStats {
    pub fn absorb(&mut self, r: &cnmtr::CnmtrResult) {
        self.f_evals += r.f_evals;
        self.jac_evals += r.jac_evals;
        self.solves += 1;
    }
}

/// The four deterministic starts: all ones, the two half-and-half sign
/// splits, and all minus ones. For odd `n` the first half has `ceil(n/2)`
/// entries; exact duplicates (which appear for `n = 1`) are removed.
pub fn standard_starts(n: usize) -> Vec<Vector> {
    assert!(n >= 1);
    let half = n.div_ceil(2);
    let split = |head: f64, tail: f64| -> Vector {
        let mut v = vec![head; n];
        for t in v[half..].iter_mut() {
            *t = tail;
        }
        Vector::new(v).expect("starts are finite")
    };
    let raw = [
        Vector::ones(n),
        split(1.0, -1.0),
        split(-1.0, 1.0),
        Vector::filled(n, -1.0),
    ];
    let mut out: Vec<Vector> = Vec::with_capacity(4);
    for s in raw {
        if !out.iter().any(|p| p.as_slice() == s.as_slice()) {
            out.push(s);
        }
    }
    out
}

/// Runs the full enumeration and returns the stationary points found.
pub fn enumerate_stationary_points(
    problem: &Problem,
    config: &SolverConfig,
) -> Result<StationaryPointSet, Error> {
    enumerate_with_stats(problem, config).map(|(set, _)| set)
}

/// Enumeration plus the accumulated evaluation counters.
pub fn enumerate_with_stats(
    problem: &Problem,
    config: &SolverConfig,
) -> Result<(StationaryPointSet, SolveStats), Error> {
    config.validate()?;
    let mut registry = problem.deflated_system(config.fd_step, config.dup_tol);
    let mut set = StationaryPointSet::default();
    let mut stats = SolveStats::default();

    for (start_index, start) in standard_starts(problem.dim()).iter().enumerate() {
        for _ in 0..config.per_start_cap {
            // A start that coincides with a registered root sits on a pole of
            // the deflated function. Nudge it off the pole so the chain can
            // continue toward further roots.
            let mut x0 = start.as_slice().to_vec();
            if registry.is_at_registered_root(&x0) {
                for v in x0.iter_mut() {
                    *v += config.dup_tol;
                }
                if registry.is_at_registered_root(&x0) {
                    break;
                }
            }

            let result = match cnmtr::solve(&registry, &x0, config) {
                Ok(r) => r,
                Err(_) => break,
            };
            stats.absorb(&result);
            if !result.converged {
                break;
            }

            // The solve converged on the deflated residual; the candidate
            // only counts if the raw gradient is small as well. The deflation
            // scale loosens the raw tolerance, so a candidate that misses it
            // is handed back to the plain solver. A drifted trajectory (the
            // deflated residual can vanish far away while the gradient stays
            // large) fails this extra solve and ends the chain.
            let mut candidate = result.x_star;
            let raw = problem.gradient(&candidate);
            if raw.iter().any(|v| !v.is_finite()) {
                break;
            }
            let mut raw_residual = inf_norm(&raw);
            if raw_residual > config.eps {
                let raw_system = problem.gradient_system(config.fd_step);
                match cnmtr::solve(&raw_system, &candidate, config) {
                    Ok(refined) if refined.converged => {
                        stats.absorb(&refined);
                        raw_residual = refined.residual_inf;
                        candidate = refined.x_star;
                    }
                    Ok(failed) => {
                        stats.absorb(&failed);
                        break;
                    }
                    Err(_) => break,
                }
            }

            registry = match registry.register_root(candidate.clone()) {
                Ok(next) => next,
                Err(_) => break,
            };
            set.points.push(candidate.clone());
            set.f_values.push(problem.eval(&candidate));
            set.residuals.push(raw_residual);
            set.origin_start.push(start_index);
        }
    }

    if set.is_empty() {
        return Err(Error::NoStationaryPoints);
    }
    Ok((set, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems;

    #[test]
    fn starts_n2() {
        let s = standard_starts(2);
        let got: Vec<&[f64]> = s.iter().map(|v| v.as_slice()).collect();
        assert_eq!(
            got,
            vec![
                &[1.0, 1.0][..],
                &[1.0, -1.0][..],
                &[-1.0, 1.0][..],
                &[-1.0, -1.0][..]
            ]
        );
    }

    #[test]
    fn starts_n1_deduplicated() {
        let s = standard_starts(1);
        let got: Vec<&[f64]> = s.iter().map(|v| v.as_slice()).collect();
        assert_eq!(got, vec![&[1.0][..], &[-1.0][..]]);
    }

    #[test]
    fn starts_n4() {
        let s = standard_starts(4);
        assert_eq!(s[1].as_slice(), &[1.0, 1.0, -1.0, -1.0]);
        assert_eq!(s[2].as_slice(), &[-1.0, -1.0, 1.0, 1.0]);
    }

    #[test]
    fn starts_n5_splits_on_ceil() {
        let s = standard_starts(5);
        assert_eq!(s[1].as_slice(), &[1.0, 1.0, 1.0, -1.0, -1.0]);
        assert_eq!(s[2].as_slice(), &[-1.0, -1.0, -1.0, 1.0, 1.0]);
    }

    fn quartic_f(x: &[f64]) -> f64 {
        (x[0] * x[0] - 1.0).powi(2) / 4.0
    }

    fn quartic_grad(x: &[f64]) -> Vec<f64> {
        vec![x[0].powi(3) - x[0]]
    }

    #[test]
    fn one_dimensional_quartic_yields_all_three_roots() {
        // Gradient x^3 - x has exactly the roots -1, 0, 1 (brute enumeration
        // of the cubic); the starts coincide with two of them.
        let p = problems::Problem::custom("quartic", 1, quartic_f, quartic_grad, None);
        let set = enumerate_stationary_points(&p, &SolverConfig::default()).unwrap();
        let mut found: Vec<f64> = set.points.iter().map(|v| v[0]).collect();
        found.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(found.len(), 3, "found {found:?}");
        assert!((found[0] + 1.0).abs() < 1e-6);
        assert!(found[1].abs() < 1e-6);
        assert!((found[2] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn sphere_has_exactly_one_stationary_point() {
        let p = problems::by_name("sphere", Some(4)).unwrap();
        let set = enumerate_stationary_points(&p, &SolverConfig::default()).unwrap();
        assert_eq!(set.len(), 1);
        for v in set.points[0].iter() {
            assert!(v.abs() < 1e-6);
        }
        assert!(set.residuals[0] <= 1e-6);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let p = problems::by_name("himmelblau", None).unwrap();
        let c = SolverConfig::default();
        let a = enumerate_stationary_points(&p, &c).unwrap();
        let b = enumerate_stationary_points(&p, &c).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.points.iter().zip(b.points.iter()) {
            assert_eq!(x.as_slice(), y.as_slice());
        }
        assert_eq!(a.f_values, b.f_values);
        assert_eq!(a.origin_start, b.origin_start);
    }

    #[test]
    fn all_points_are_raw_stationary_and_distinct() {
        let p = problems::by_name("six-hump-camel", None).unwrap();
        let c = SolverConfig::default();
        let set = enumerate_stationary_points(&p, &c).unwrap();
        assert!(set.len() >= 2);
        for point in &set.points {
            assert!(inf_norm(&p.gradient(point)) <= c.eps);
        }
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                let d = set.points[i]
                    .iter()
                    .zip(set.points[j].iter())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                assert!(d > c.dup_tol, "points {i} and {j} are {d} apart");
            }
        }
    }
}
