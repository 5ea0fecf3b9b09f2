//! Trace: replay the enumeration loop with per-attempt logging.

use cnmge::cnmdt::standard_starts;
use cnmge::cnmtr::{self, SolverConfig};
use cnmge::linalg::inf_norm;
use cnmge::problems;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = &args[0];
    let dim = args.get(1).map(|d| d.parse().unwrap());
    let p = problems::by_name(name, dim).unwrap();
    let config = SolverConfig::default();
    let mut registry = p.deflated_system(config.fd_step, config.dup_tol);

    for (si, start) in standard_starts(p.dim()).iter().enumerate() {
        for attempt in 0..config.per_start_cap {
            let mut x0 = start.as_slice().to_vec();
            if registry.is_at_registered_root(&x0) {
                for v in x0.iter_mut() {
                    *v += config.dup_tol;
                }
                if registry.is_at_registered_root(&x0) {
                    println!("start {si} attempt {attempt}: start exhausted (on pole)");
                    break;
                }
            }
            let result = match cnmtr::solve(&registry, &x0, &config) {
                Ok(r) => r,
                Err(e) => {
                    println!("start {si} attempt {attempt}: solve error {e}");
                    break;
                }
            };
            if !result.converged {
                println!(
                    "start {si} attempt {attempt}: {:?} iters={} res={:.2e}",
                    result.termination, result.iterations, result.residual_inf
                );
                break;
            }
            let mut candidate = result.x_star;
            let raw = p.gradient(&candidate);
            let mut raw_res = inf_norm(&raw);
            if !raw_res.is_finite() {
                println!("start {si} attempt {attempt}: non-finite raw gradient");
                break;
            }
            if raw_res > 1e-3 {
                println!("start {si} attempt {attempt}: drifted, raw={raw_res:.2e}");
                break;
            }
            if raw_res > config.eps {
                let raw_system = p.gradient_system(config.fd_step);
                match cnmtr::solve(&raw_system, &candidate, &config) {
                    Ok(refined) if refined.converged => {
                        raw_res = refined.residual_inf;
                        candidate = refined.x_star;
                    }
                    Ok(failed) => {
                        println!(
                            "start {si} attempt {attempt}: refinement failed {:?} raw={raw_res:.2e}",
                            failed.termination
                        );
                        break;
                    }
                    Err(e) => {
                        println!("start {si} attempt {attempt}: refinement error {e}");
                        break;
                    }
                }
            }
            match registry.register_root(candidate.clone()) {
                Ok(next) => registry = next,
                Err(e) => {
                    println!("start {si} attempt {attempt}: {e} f={:.6}", p.eval(&candidate));
                    break;
                }
            }
            let head: Vec<f64> = candidate.iter().take(3).copied().collect();
            println!(
                "start {si} attempt {attempt}: registered f={:<14.6} iters={} x[..3]={:?}",
                p.eval(&candidate),
                result.iterations,
                head
            );
        }
    }
    println!("total roots: {}", registry.root_count());
}
