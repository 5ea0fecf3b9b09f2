//! Quasi-genetic evolution over stationary-point seeds and the full global
//! pipeline: enumerate stationary points, evolve by convex midpoint
//! crossover, then polish the best point with a final continuation Newton
//! solve.
//!
//! The evolution is fully deterministic: the only operator is the pairwise
//! midpoint, selection keeps the `L` smallest objective values from the union
//! of parents and offspring, and no randomness enters anywhere.

use std::time::Instant;

use crate::cnmdt::{self, StationaryPointSet};
use crate::cnmtr::{self, SolverConfig};
use crate::error::Error;
use crate::linalg::Vector;
use crate::problems::Problem;
use crate::report::{digest, RunReport, Status, DEFAULT_REPORT_TOL};

/// Tolerance under which two candidates collapse to one before selection.
const DEDUP_TOL: f64 = 1e-12;

/// Population of the evolution, kept sorted by objective value.
#[derive(Debug, Clone)]
pub struct Population {
    pub members: Vec<Vector>,
    pub f_values: Vec<f64>,
    pub generation: usize,
}

impl Population {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn best(&self) -> (&Vector, f64) {
        (&self.members[0], self.f_values[0])
    }
}

/// Final answer of the global pipeline.
#[derive(Debug, Clone)]
pub struct GlobalResult {
    pub x_min: Vector,
    pub f_min: f64,
    /// Best point of the last evolution generation (pre-polish).
    pub x_ag: Vector,
    /// Polished point; equals `x_ag` when the polish failed.
    pub x_cn: Vector,
    pub stationary_count: usize,
    /// The stationary points that seeded the evolution.
    pub stationary_points: StationaryPointSet,
    pub report: RunReport,
}

/// The deterministic seed blocks `[ones, -ones, (+/-) split, (-/+) split]`
/// used for supplementation.
fn seed_blocks(n: usize) -> [Vector; 4] {
    let half = n.div_ceil(2);
    let split = |head: f64, tail: f64| -> Vector {
        let mut v = vec![head; n];
        for t in v[half..].iter_mut() {
            *t = tail;
        }
        Vector::new(v).expect("finite seed")
    };
    [
        Vector::ones(n),
        Vector::filled(n, -1.0),
        split(1.0, -1.0),
        split(-1.0, 1.0),
    ]
}

/// Deterministic filler seeds: the origin, then the seed blocks at scales
/// 0.1, 1, 10, 100, ... truncated to `count`.
pub fn supplemental_seeds(n: usize, count: usize) -> Vec<Vector> {
    assert!(count >= 1);
    let blocks = seed_blocks(n);
    let mut out = Vec::with_capacity(count);
    out.push(Vector::zeros(n));
    let mut scale = 0.1;
    'outer: loop {
        for b in &blocks {
            if out.len() >= count {
                break 'outer;
            }
            let scaled: Vec<f64> = b.iter().map(|v| scale * v).collect();
            out.push(Vector::new(scaled).expect("finite seed"));
        }
        if out.len() >= count {
            break;
        }
        scale *= 10.0;
    }
    out.truncate(count);
    out
}

/// All pairwise midpoints of the population, in `(i, j > i)` order:
/// `L(L-1)/2` offspring.
pub fn crossover_generation(pop: &Population) -> Vec<Vector> {
    let l = pop.members.len();
    let mut out = Vec::with_capacity(l * (l.saturating_sub(1)) / 2);
    for i in 0..l {
        for j in i + 1..l {
            let mid: Vec<f64> = pop.members[i]
                .iter()
                .zip(pop.members[j].iter())
                .map(|(a, b)| 0.5 * (a + b))
                .collect();
            out.push(Vector::new(mid).expect("midpoint of finite points"));
        }
    }
    out
}

/// Keeps the `L` candidates with the smallest objective values.
///
/// Candidates with non-finite objective values are discarded (an error only
/// when none survive); near-identical candidates collapse to the earliest
/// one; ties in `f` keep input order. Returns fewer than `L` members when
/// fewer distinct candidates exist.
pub fn select_best<F>(candidates: Vec<Vector>, f: F, l: usize) -> Result<Population, Error>
where
    F: Fn(&[f64]) -> f64,
{
    assert!(l >= 1);
    let mut kept: Vec<(Vector, f64)> = Vec::with_capacity(candidates.len());
    for c in candidates {
        let value = f(&c);
        if !value.is_finite() {
            continue;
        }
        let duplicate = kept.iter().any(|(k, _)| {
            k.iter()
                .zip(c.iter())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
                <= DEDUP_TOL
        });
        if !duplicate {
            kept.push((c, value));
        }
    }
    if kept.is_empty() {
        return Err(Error::NoFiniteCandidates);
    }
    // Stable sort keeps input order among equal objective values.
    kept.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("finite objective values"));
    kept.truncate(l);
    let (members, f_values) = kept.into_iter().unzip();
    Ok(Population {
        members,
        f_values,
        generation: 0,
    })
}

/// Runs `M` generations of midpoint crossover plus union selection over the
/// stationary-point seeds and returns the best point of the last generation.
pub fn evolve(
    seeds: &StationaryPointSet,
    problem: &Problem,
    l: usize,
    m: usize,
) -> Result<Vector, Error> {
    evolve_with_history(seeds, problem, l, m).map(|(best, _)| best)
}

/// Like [`evolve`], also returning the best objective value of every
/// generation (`m + 1` entries, generation 0 first).
pub fn evolve_with_history(
    seeds: &StationaryPointSet,
    problem: &Problem,
    l: usize,
    m: usize,
) -> Result<(Vector, Vec<f64>), Error> {
    let n = problem.dim();
    let f = |x: &[f64]| problem.eval(x);

    let mut candidates = seeds.points.clone();
    if candidates.len() < l {
        candidates.extend(supplemental_seeds(n, l - candidates.len()));
    }
    let mut pop = select_best(candidates, f, l)?;
    let mut history = Vec::with_capacity(m + 1);
    history.push(pop.f_values[0]);

    for generation in 1..=m {
        let mut candidates = pop.members.clone();
        candidates.extend(crossover_generation(&pop));
        pop = select_best(candidates, f, l)?;
        pop.generation = generation;
        history.push(pop.f_values[0]);
    }

    Ok((pop.members[0].clone(), history))
}

/// Full global-optimization pipeline with the default report tolerance.
pub fn cnmge(problem: &Problem, config: &SolverConfig) -> Result<GlobalResult, Error> {
    cnmge_with_tol(problem, config, DEFAULT_REPORT_TOL)
}

/// Full pipeline: stationary-point enumeration, quasi-genetic evolution and
/// a final polish solve from the evolved best point. The report status is
/// classified against `report_tol`.
pub fn cnmge_with_tol(
    problem: &Problem,
    config: &SolverConfig,
    report_tol: f64,
) -> Result<GlobalResult, Error> {
    let t0 = Instant::now();
    let (seeds, mut stats) = cnmdt::enumerate_with_stats(problem, config)?;
    let x_ag = evolve(&seeds, problem, config.population, config.generations)?;
    let f_ag = problem.eval(&x_ag);

    let polish_system = problem.gradient_system(config.fd_step);
    let polish = cnmtr::solve(&polish_system, &x_ag, config);
    let (x_cn, converged_polish) = match polish {
        Ok(r) => {
            stats.absorb(&r);
            if r.converged {
                (r.x_star, true)
            } else {
                (x_ag.clone(), false)
            }
        }
        Err(_) => (x_ag.clone(), false),
    };

    let f_cn = problem.eval(&x_cn);
    let (x_min, f_min) = if f_cn.is_finite() && f_cn <= f_ag {
        (x_cn.clone(), f_cn)
    } else {
        (x_ag.clone(), f_ag)
    };

    let report = RunReport {
        problem: problem.name().to_string(),
        n: problem.dim(),
        f_min,
        known_min: problem.known_min(),
        x_min_digest: digest(&x_min),
        stationary_count: seeds.len(),
        converged_polish,
        f_evals: stats.f_evals,
        jac_evals: stats.jac_evals,
        wall_seconds: t0.elapsed().as_secs_f64(),
        status: Status::classify(
            f_min,
            problem.known_min(),
            problem.is_box_reference(),
            report_tol,
        ),
    };

    Ok(GlobalResult {
        x_min,
        f_min,
        x_ag,
        x_cn,
        stationary_count: seeds.len(),
        stationary_points: seeds,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems;

    #[test]
    fn supplemental_seed_order() {
        let s = supplemental_seeds(2, 3);
        assert_eq!(s[0].as_slice(), &[0.0, 0.0]);
        assert_eq!(s[1].as_slice(), &[0.1, 0.1]);
        assert_eq!(s[2].as_slice(), &[-0.1, -0.1]);

        assert_eq!(supplemental_seeds(2, 1)[0].as_slice(), &[0.0, 0.0]);

        let s = supplemental_seeds(4, 6);
        assert_eq!(s.len(), 6);
        assert_eq!(s[0].as_slice(), &[0.0; 4]);
        assert_eq!(s[1].as_slice(), &[0.1; 4]);
        assert_eq!(s[2].as_slice(), &[-0.1; 4]);
        assert_eq!(s[3].as_slice(), &[0.1, 0.1, -0.1, -0.1]);
        assert_eq!(s[4].as_slice(), &[-0.1, -0.1, 0.1, 0.1]);
        assert_eq!(s[5].as_slice(), &[1.0; 4]);
    }

    fn pop_of(points: &[&[f64]], f: impl Fn(&[f64]) -> f64) -> Population {
        let candidates: Vec<Vector> = points
            .iter()
            .map(|p| Vector::new(p.to_vec()).unwrap())
            .collect();
        select_best(candidates, f, points.len()).unwrap()
    }

    #[test]
    fn midpoints() {
        let sphere = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
        let pop = pop_of(&[&[0.0, 0.0], &[2.0, 4.0]], sphere);
        let kids = crossover_generation(&pop);
        assert_eq!(kids.len(), 1);
        assert_eq!(kids[0].as_slice(), &[1.0, 2.0]);

        let pop = pop_of(&[&[0.0], &[2.0], &[4.0]], |x: &[f64]| x[0]);
        let kids = crossover_generation(&pop);
        assert_eq!(kids.len(), 3);
        assert_eq!(kids[0].as_slice(), &[1.0]);
        assert_eq!(kids[1].as_slice(), &[2.0]);
        assert_eq!(kids[2].as_slice(), &[3.0]);
    }

    #[test]
    fn midpoint_of_equal_points_is_the_point() {
        let v = Vector::new(vec![1.5, -2.5]).unwrap();
        let pop = Population {
            members: vec![v.clone(), v.clone()],
            f_values: vec![0.0, 0.0],
            generation: 0,
        };
        let kids = crossover_generation(&pop);
        assert_eq!(kids.len(), 1);
        assert_eq!(kids[0].as_slice(), v.as_slice());
    }

    #[test]
    fn selection_sorts_dedupes_and_truncates() {
        let candidates = vec![
            Vector::new(vec![3.0]).unwrap(),
            Vector::new(vec![1.0]).unwrap(),
            Vector::new(vec![2.0]).unwrap(),
        ];
        let pop = select_best(candidates, |x| x[0], 2).unwrap();
        assert_eq!(pop.f_values, vec![1.0, 2.0]);

        // Ties keep the earlier candidate.
        let candidates = vec![
            Vector::new(vec![5.0, 0.0]).unwrap(),
            Vector::new(vec![0.0, 5.0]).unwrap(),
        ];
        let pop = select_best(candidates, |x| x[0] + x[1], 1).unwrap();
        assert_eq!(pop.members[0].as_slice(), &[5.0, 0.0]);

        // Fewer candidates than slots.
        let candidates = vec![
            Vector::new(vec![1.0]).unwrap(),
            Vector::new(vec![2.0]).unwrap(),
        ];
        let pop = select_best(candidates, |x| x[0], 20).unwrap();
        assert_eq!(pop.len(), 2);
    }

    #[test]
    fn selection_discards_non_finite() {
        let candidates = vec![
            Vector::new(vec![0.0]).unwrap(),
            Vector::new(vec![1.0]).unwrap(),
        ];
        let f = |x: &[f64]| if x[0] == 0.0 { f64::NAN } else { x[0] };
        let pop = select_best(candidates, f, 2).unwrap();
        assert_eq!(pop.len(), 1);
        assert_eq!(pop.members[0].as_slice(), &[1.0]);

        let candidates = vec![Vector::new(vec![0.0]).unwrap()];
        assert_eq!(
            select_best(candidates, |_| f64::NAN, 2).unwrap_err(),
            Error::NoFiniteCandidates
        );
    }

    fn quartic_f(x: &[f64]) -> f64 {
        (x[0] * x[0] - 1.0).powi(2) / 4.0
    }

    fn quartic_grad(x: &[f64]) -> Vec<f64> {
        vec![x[0].powi(3) - x[0]]
    }

    #[test]
    fn evolution_prefers_outer_wells_of_the_quartic() {
        // f(x) = (x^2 - 1)^2 / 4 has stationary points -1, 0, 1; the wells at
        // +-1 are global (f = 0), the hump at 0 has f = 1/4. Two generations
        // over those three seeds never pick the hump.
        let p = problems::Problem::custom("quartic", 1, quartic_f, quartic_grad, None);
        let seeds = StationaryPointSet {
            points: vec![
                Vector::new(vec![-1.0]).unwrap(),
                Vector::new(vec![0.0]).unwrap(),
                Vector::new(vec![1.0]).unwrap(),
            ],
            f_values: vec![0.0, 0.25, 0.0],
            residuals: vec![0.0; 3],
            origin_start: vec![0, 0, 1],
        };
        let best = evolve(&seeds, &p, 3, 2).unwrap();
        assert!((best[0].abs() - 1.0).abs() < 1e-12, "best = {}", best[0]);
    }

    #[test]
    fn union_selection_is_elitist() {
        let p = problems::by_name("styblinski-tang", Some(3)).unwrap();
        let c = SolverConfig::default();
        let seeds = cnmdt::enumerate_stationary_points(&p, &c).unwrap();
        let (_, history) = evolve_with_history(&seeds, &p, 6, 8).unwrap();
        for w in history.windows(2) {
            assert!(w[1] <= w[0], "best f increased: {:?}", history);
        }
    }

    #[test]
    fn single_seed_at_global_minimum_survives() {
        let p = problems::by_name("sphere", Some(2)).unwrap();
        let seeds = StationaryPointSet {
            points: vec![Vector::zeros(2)],
            f_values: vec![0.0],
            residuals: vec![0.0],
            origin_start: vec![0],
        };
        let (best, history) = evolve_with_history(&seeds, &p, 20, 10).unwrap();
        assert_eq!(best.as_slice(), &[0.0, 0.0]);
        assert!(history.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn pipeline_on_convex_problem() {
        let p = problems::by_name("sphere", Some(6)).unwrap();
        let r = cnmge(&p, &SolverConfig::default()).unwrap();
        assert!(r.f_min.abs() < 1e-10);
        assert_eq!(r.stationary_count, 1);
        assert_eq!(r.report.status, crate::report::Status::Solved);
        // The global answer is at least as good as every stationary point.
        let seeds = cnmdt::enumerate_stationary_points(&p, &SolverConfig::default()).unwrap();
        for &fv in &seeds.f_values {
            assert!(r.f_min <= fv + 1e-15);
        }
    }
}
