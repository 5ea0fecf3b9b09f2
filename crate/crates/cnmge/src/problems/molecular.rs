//! Molecular potential energy of a chain of beads as a function of its
//! torsion angles. Separable per coordinate; the number of local minimizers
//! grows exponentially with the dimension.

use super::{problem, Problem};
use crate::error::Error;
use crate::linalg::Matrix;
use std::f64::consts::PI;

const C1: f64 = 10.60099896;
const C2: f64 = 4.141720682;

/// Per-coordinate minimizer and minimum of the odd-index term
/// `1 + cos(3w) - 1/sqrt(C1 - C2 cos w)`.
const OMEGA_ODD: f64 = 1.039_195_302_600_207_8;
const TERM_ODD_MIN: f64 = -0.342_678_711_690_806_37;

/// Per-coordinate minimizer and minimum of the even-index term
/// `1 + cos(3w) + 1/sqrt(C1 - C2 cos w)`.
const OMEGA_EVEN: f64 = PI;
const TERM_EVEN_MIN: f64 = 0.260_442_104_869_847_75;

/// `f(w) = sum_i (1 + cos(3 w_i) + (-1)^i / sqrt(10.60099896 - 4.141720682 cos w_i))`
/// with the index `i` starting at 1. The radicand stays above 6.4 for any
/// angle, so the energy is defined everywhere.
pub fn molecular_energy(omega: &[f64]) -> f64 {
    omega
        .iter()
        .enumerate()
        .map(|(idx, &w)| {
            let sign = if idx % 2 == 0 { -1.0 } else { 1.0 };
            1.0 + (3.0 * w).cos() + sign / (C1 - C2 * w.cos()).sqrt()
        })
        .sum()
}

fn gradient(omega: &[f64]) -> Vec<f64> {
    omega
        .iter()
        .enumerate()
        .map(|(idx, &w)| {
            let sign = if idx % 2 == 0 { -1.0 } else { 1.0 };
            let radicand = C1 - C2 * w.cos();
            -3.0 * (3.0 * w).sin() - sign * C2 * w.sin() / (2.0 * radicand.powf(1.5))
        })
        .collect()
}

fn hessian(omega: &[f64]) -> Matrix {
    let n = omega.len();
    let mut h = Matrix::zeros(n);
    for (idx, &w) in omega.iter().enumerate() {
        let sign = if idx % 2 == 0 { -1.0 } else { 1.0 };
        let radicand = C1 - C2 * w.cos();
        let d2 = -9.0 * (3.0 * w).cos()
            - sign
                * (C2 / 2.0)
                * (w.cos() / radicand.powf(1.5)
                    - 1.5 * C2 * w.sin() * w.sin() / radicand.powf(2.5));
        h.set(idx, idx, d2);
    }
    h
}

pub(super) fn build(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(Error::InvalidDimension {
            name: "molecular-energy",
            dim: n,
        });
    }
    let odd_count = n.div_ceil(2);
    let even_count = n / 2;
    let known_min = odd_count as f64 * TERM_ODD_MIN + even_count as f64 * TERM_EVEN_MIN;
    let argmin: Vec<f64> = (0..n)
        .map(|idx| if idx % 2 == 0 { OMEGA_ODD } else { OMEGA_EVEN })
        .collect();
    Ok(problem(
        "molecular-energy",
        n,
        molecular_energy,
        gradient,
        Some(hessian),
        Some(known_min),
        Some(argmin),
        true,
        false,
        true,
    ))
}
