//! Trace: run the bare solver from each standard start and print outcomes.

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
    let sys = p.gradient_system(config.fd_step);
    for (i, s) in standard_starts(p.dim()).iter().enumerate() {
        match cnmtr::solve(&sys, s, &config) {
            Ok(r) => {
                let raw = inf_norm(&p.gradient(&r.x_star));
                let head: Vec<f64> = r.x_star.iter().take(4).copied().collect();
                println!(
                    "start {i}: {:?} iters={} res={:.3e} raw={:.3e} f={:.8} x[..4]={:?}",
                    r.termination,
                    r.iterations,
                    r.residual_inf,
                    raw,
                    p.eval(&r.x_star),
                    head
                );
            }
            Err(e) => println!("start {i}: ERROR {e}"),
        }
    }
}
