//! Quick scan of the catalog: prints the pipeline answer next to the
//! reference minimum for each problem.

use cnmge::cnmtr::SolverConfig;
use cnmge::{problems, qge};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let config = SolverConfig::default();
    let list: Vec<(String, Option<usize>)> = if args.is_empty() {
        problems::names()
            .into_iter()
            .map(|n| (n.to_string(), None))
            .collect()
    } else {
        args.iter()
            .map(|a| {
                let mut it = a.split(':');
                let name = it.next().unwrap().to_string();
                let dim = it.next().map(|d| d.parse().unwrap());
                (name, dim)
            })
            .collect()
    };
    for (name, dim) in list {
        let p = match problems::by_name(&name, dim) {
            Ok(p) => p,
            Err(e) => {
                println!("{name:<24} ERROR {e}");
                continue;
            }
        };
        let t = Instant::now();
        match qge::cnmge(&p, &config) {
            Ok(r) => {
                let known = p
                    .known_min()
                    .map(|v| format!("{v:.6}"))
                    .unwrap_or_else(|| "?".to_string());
                println!(
                    "{:<24} n={:<5} f_min={:<15.8} known={:<12} K={:<4} polish={} {:?} {:.2}s",
                    p.name(),
                    p.dim(),
                    r.f_min,
                    known,
                    r.stationary_count,
                    r.report.converged_polish,
                    r.report.status,
                    t.elapsed().as_secs_f64()
                );
            }
            Err(e) => println!("{:<24} n={:<5} PIPELINE ERROR {e}", p.name(), p.dim()),
        }
    }
}
