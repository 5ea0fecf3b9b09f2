use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use cnmge::cnmtr::SolverConfig;
use cnmge::problems;
use cnmge_cli::output;
use cnmge_cli::runner::{self, Suite};

/// Global-optimization benchmark harness.
///
/// Runs the continuation Newton pipeline (stationary-point enumeration under
/// deflation, quasi-genetic evolution, final polish) over benchmark problems
/// and prints a report table. All configuration is by flags; no environment
/// variables are read.
#[derive(Parser, Debug)]
#[command(name = "cnmge", version, about)]
struct Cli {
    /// Run a single catalog problem by name.
    #[arg(long, conflicts_with = "suite")]
    problem: Option<String>,

    /// Run a whole suite: small, large or all.
    #[arg(long, value_enum)]
    suite: Option<SuiteArg>,

    /// Dimension override (scalable problems only, together with --problem).
    #[arg(long, requires = "problem")]
    dim: Option<usize>,

    /// Absolute tolerance for the solved status.
    /// Defaults to 1e-4 for small-scale and 1e-1 for large-scale problems.
    #[arg(long)]
    tol: Option<f64>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Cap on deflated solves per start.
    #[arg(long)]
    max_stationary: Option<usize>,

    /// Write the stationary points found per problem to this JSON file.
    #[arg(long)]
    seed_dump: Option<PathBuf>,

    /// List the catalog problem names and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Small,
    Large,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Small => Suite::Small,
            SuiteArg::Large => Suite::Large,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if cli.list {
        for name in problems::names() {
            println!("{name}");
        }
        return ExitCode::SUCCESS;
    }

    let selected = if let Some(name) = &cli.problem {
        match problems::by_name(name, cli.dim) {
            Ok(p) => vec![p],
            Err(e) => {
                eprintln!("error: {e}");
                eprintln!("valid problem names:");
                for name in problems::names() {
                    eprintln!("  {name}");
                }
                return ExitCode::from(2);
            }
        }
    } else if let Some(suite) = cli.suite {
        runner::suite_problems(suite.into())
    } else {
        eprintln!("error: pass --problem <name>, --suite <small|large|all> or --list");
        return ExitCode::from(2);
    };

    if let Some(tol) = cli.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            eprintln!("error: --tol must be a positive number");
            return ExitCode::from(2);
        }
    }

    let mut config = SolverConfig::default();
    if let Some(cap) = cli.max_stationary {
        if cap == 0 {
            eprintln!("error: --max-stationary must be at least 1");
            return ExitCode::from(2);
        }
        config.per_start_cap = cap;
    }

    let outcomes = runner::run_all(&selected, &config, cli.tol);
    let reports: Vec<_> = outcomes.iter().map(|o| o.report.clone()).collect();

    if let Some(path) = &cli.seed_dump {
        let entries: Vec<(String, Vec<Vec<f64>>, Vec<f64>)> = outcomes
            .iter()
            .map(|o| {
                (
                    o.report.problem.clone(),
                    o.points.clone(),
                    o.point_values.clone(),
                )
            })
            .collect();
        if let Err(e) = std::fs::write(path, output::write_seed_dump(&entries)) {
            eprintln!("error: cannot write seed dump to {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }

    let rendered = match cli.format {
        Format::Csv => output::write_csv(&reports),
        Format::Json => output::write_json(&reports),
        Format::Table => output::write_table(&reports),
    };
    print!("{rendered}");

    ExitCode::from(runner::exit_code(&reports) as u8)
}
