//! Report rendering: CSV, JSON and a human-readable table.

use cnmge::report::RunReport;
use serde_json::{json, Value};

/// Formats a float with 9 significant digits.
pub fn sig9(v: f64) -> String {
    format!("{v:.8e}")
}

/// Rounds a float to 9 significant digits via its printed form.
pub fn round_sig9(v: f64) -> f64 {
    sig9(v).parse().expect("formatted float parses back")
}

/// CSV report: fixed column set, floats at 9 significant digits, empty cell
/// for an unknown reference minimum.
pub fn write_csv(reports: &[RunReport]) -> String {
    let mut out = String::from(
        "problem,n,f_min,known_min,status,stationary_count,f_evals,jac_evals,wall_seconds\n",
    );
    for r in reports {
        let known = r.known_min.map(sig9).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.problem,
            r.n,
            sig9(r.f_min),
            known,
            r.status.as_str(),
            r.stationary_count,
            r.f_evals,
            r.jac_evals,
            sig9(r.wall_seconds),
        ));
    }
    out
}

/// JSON report: an array of objects with the same field names as the CSV
/// columns; floats rounded to 9 significant digits.
pub fn write_json(reports: &[RunReport]) -> String {
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "problem": r.problem,
                "n": r.n,
                "f_min": round_sig9(r.f_min),
                "known_min": r.known_min.map(round_sig9),
                "status": r.status.as_str(),
                "stationary_count": r.stationary_count,
                "f_evals": r.f_evals,
                "jac_evals": r.jac_evals,
                "wall_seconds": round_sig9(r.wall_seconds),
            })
        })
        .collect();
    serde_json::to_string_pretty(&Value::Array(rows)).expect("report serializes")
}

/// Human-readable table with the minimizer preview.
pub fn write_table(reports: &[RunReport]) -> String {
    let mut out = format!(
        "{:<26} {:>5} {:>16} {:>16} {:<20} {:>5} {:>9} {:>9} {:>9}  {}\n",
        "problem",
        "n",
        "f_min",
        "known_min",
        "status",
        "K",
        "f_evals",
        "jac_evals",
        "wall_s",
        "x_min"
    );
    for r in reports {
        let known = r
            .known_min
            .map(|v| format!("{v:.6e}"))
            .unwrap_or_else(|| "-".to_string());
        out.push_str(&format!(
            "{:<26} {:>5} {:>16.6e} {:>16} {:<20} {:>5} {:>9} {:>9} {:>9.2} {}\n",
            r.problem,
            r.n,
            r.f_min,
            known,
            r.status.as_str(),
            r.stationary_count,
            r.f_evals,
            r.jac_evals,
            r.wall_seconds,
            r.x_min_digest,
        ));
    }
    out
}

/// Stationary-point dump for `--seed-dump`: one object per problem.
pub fn write_seed_dump(entries: &[(String, Vec<Vec<f64>>, Vec<f64>)]) -> String {
    let rows: Vec<Value> = entries
        .iter()
        .map(|(problem, points, values)| {
            json!({
                "problem": problem,
                "points": points,
                "f_values": values,
            })
        })
        .collect();
    serde_json::to_string_pretty(&Value::Array(rows)).expect("seed dump serializes")
}
