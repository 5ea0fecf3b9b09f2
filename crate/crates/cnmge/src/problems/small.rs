//! Fixed-dimension benchmark objectives (the small-scale half of the suite).

use super::{problem, Problem};
use crate::error::Error;
use crate::linalg::Matrix;
use std::f64::consts::PI;

fn fixed_dim(name: &'static str, expected: usize, n: usize) -> Result<(), Error> {
    if n == expected {
        Ok(())
    } else {
        Err(Error::InvalidDimension { name, dim: n })
    }
}

fn sgn(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Derivative of `sqrt(|t|)` where it exists, zero on the kink itself.
fn dsqrt_abs(t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        sgn(t) / (2.0 * t.abs().sqrt())
    }
}

// ---------------------------------------------------------------------------
// Levy N.13: global minimum f(1, 1) = 0.

fn levy13_f(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (3.0 * PI * a).sin().powi(2)
        + (a - 1.0).powi(2) * (1.0 + (3.0 * PI * b).sin().powi(2))
        + (b - 1.0).powi(2) * (1.0 + (2.0 * PI * b).sin().powi(2))
}

fn levy13_grad(x: &[f64]) -> Vec<f64> {
    let (a, b) = (x[0], x[1]);
    vec![
        3.0 * PI * (6.0 * PI * a).sin() + 2.0 * (a - 1.0) * (1.0 + (3.0 * PI * b).sin().powi(2)),
        (a - 1.0).powi(2) * 3.0 * PI * (6.0 * PI * b).sin()
            + 2.0 * (b - 1.0) * (1.0 + (2.0 * PI * b).sin().powi(2))
            + (b - 1.0).powi(2) * 2.0 * PI * (4.0 * PI * b).sin(),
    ]
}

pub(super) fn levy13(n: usize) -> Result<Problem, Error> {
    fixed_dim("levy13", 2, n)?;
    Ok(problem(
        "levy13",
        2,
        levy13_f,
        levy13_grad,
        None,
        Some(0.0),
        Some(vec![1.0, 1.0]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Beale: global minimum f(3, 0.5) = 0.

fn beale_f(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (1.5 - a + a * b).powi(2) + (2.25 - a + a * b * b).powi(2) + (2.625 - a + a * b * b * b).powi(2)
}

fn beale_grad(x: &[f64]) -> Vec<f64> {
    let (a, b) = (x[0], x[1]);
    let t1 = 1.5 - a + a * b;
    let t2 = 2.25 - a + a * b * b;
    let t3 = 2.625 - a + a * b * b * b;
    vec![
        2.0 * t1 * (b - 1.0) + 2.0 * t2 * (b * b - 1.0) + 2.0 * t3 * (b * b * b - 1.0),
        2.0 * t1 * a + 4.0 * t2 * a * b + 6.0 * t3 * a * b * b,
    ]
}

pub(super) fn beale(n: usize) -> Result<Problem, Error> {
    fixed_dim("beale", 2, n)?;
    Ok(problem(
        "beale",
        2,
        beale_f,
        beale_grad,
        None,
        Some(0.0),
        Some(vec![3.0, 0.5]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Easom: a single deep well at (pi, pi) in an almost flat plane.
// Global minimum f(pi, pi) = -1.

fn easom_f(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    -a.cos() * b.cos() * (-(a - PI).powi(2) - (b - PI).powi(2)).exp()
}

fn easom_grad(x: &[f64]) -> Vec<f64> {
    let (a, b) = (x[0], x[1]);
    let e = (-(a - PI).powi(2) - (b - PI).powi(2)).exp();
    vec![
        e * b.cos() * (a.sin() + 2.0 * (a - PI) * a.cos()),
        e * a.cos() * (b.sin() + 2.0 * (b - PI) * b.cos()),
    ]
}

pub(super) fn easom(n: usize) -> Result<Problem, Error> {
    fixed_dim("easom", 2, n)?;
    Ok(problem(
        "easom",
        2,
        easom_f,
        easom_grad,
        None,
        Some(-1.0),
        Some(vec![PI, PI]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Branin: three global minimizers, all with f = 5/(4 pi) = 0.39788735...

const BRANIN_B: f64 = 5.1 / (4.0 * PI * PI);
const BRANIN_C: f64 = 5.0 / PI;
const BRANIN_T: f64 = 1.0 / (8.0 * PI);

fn branin_f(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let u = b - BRANIN_B * a * a + BRANIN_C * a - 6.0;
    u * u + 10.0 * (1.0 - BRANIN_T) * a.cos() + 10.0
}

fn branin_grad(x: &[f64]) -> Vec<f64> {
    let (a, b) = (x[0], x[1]);
    let u = b - BRANIN_B * a * a + BRANIN_C * a - 6.0;
    vec![
        2.0 * u * (-2.0 * BRANIN_B * a + BRANIN_C) - 10.0 * (1.0 - BRANIN_T) * a.sin(),
        2.0 * u,
    ]
}

pub(super) fn branin(n: usize) -> Result<Problem, Error> {
    fixed_dim("branin", 2, n)?;
    Ok(problem(
        "branin",
        2,
        branin_f,
        branin_grad,
        None,
        Some(5.0 / (4.0 * PI)),
        Some(vec![PI, 2.275]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Booth: convex quadratic. Global minimum f(1, 3) = 0.

fn booth_f(x: &[f64]) -> f64 {
    let u = x[0] + 2.0 * x[1] - 7.0;
    let v = 2.0 * x[0] + x[1] - 5.0;
    u * u + v * v
}

fn booth_grad(x: &[f64]) -> Vec<f64> {
    let u = x[0] + 2.0 * x[1] - 7.0;
    let v = 2.0 * x[0] + x[1] - 5.0;
    vec![2.0 * u + 4.0 * v, 4.0 * u + 2.0 * v]
}

fn booth_hess(_x: &[f64]) -> Matrix {
    Matrix::from_rows(&[vec![10.0, 8.0], vec![8.0, 10.0]]).unwrap()
}

pub(super) fn booth(n: usize) -> Result<Problem, Error> {
    fixed_dim("booth", 2, n)?;
    Ok(problem(
        "booth",
        2,
        booth_f,
        booth_grad,
        Some(booth_hess),
        Some(0.0),
        Some(vec![1.0, 3.0]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Matyas: convex quadratic plate. Global minimum f(0, 0) = 0.

fn matyas_f(x: &[f64]) -> f64 {
    0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1]
}

fn matyas_grad(x: &[f64]) -> Vec<f64> {
    vec![0.52 * x[0] - 0.48 * x[1], 0.52 * x[1] - 0.48 * x[0]]
}

fn matyas_hess(_x: &[f64]) -> Matrix {
    Matrix::from_rows(&[vec![0.52, -0.48], vec![-0.48, 0.52]]).unwrap()
}

pub(super) fn matyas(n: usize) -> Result<Problem, Error> {
    fixed_dim("matyas", 2, n)?;
    Ok(problem(
        "matyas",
        2,
        matyas_f,
        matyas_grad,
        Some(matyas_hess),
        Some(0.0),
        Some(vec![0.0, 0.0]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// McCormick: global minimum -(sqrt(3)/2 + pi/3) at (1/2 - pi/3, -1/2 - pi/3).

fn mccormick_f(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (a + b).sin() + (a - b).powi(2) - 1.5 * a + 2.5 * b + 1.0
}

fn mccormick_grad(x: &[f64]) -> Vec<f64> {
    let (a, b) = (x[0], x[1]);
    vec![
        (a + b).cos() + 2.0 * (a - b) - 1.5,
        (a + b).cos() - 2.0 * (a - b) + 2.5,
    ]
}

fn mccormick_hess(x: &[f64]) -> Matrix {
    let s = -(x[0] + x[1]).sin();
    Matrix::from_rows(&[vec![s + 2.0, s - 2.0], vec![s - 2.0, s + 2.0]]).unwrap()
}

pub(super) fn mccormick(n: usize) -> Result<Problem, Error> {
    fixed_dim("mccormick", 2, n)?;
    Ok(problem(
        "mccormick",
        2,
        mccormick_f,
        mccormick_grad,
        Some(mccormick_hess),
        Some(-(3f64.sqrt() / 2.0 + PI / 3.0)),
        Some(vec![0.5 - PI / 3.0, -0.5 - PI / 3.0]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Colville: coupled quartic in four variables. Global minimum f(1,1,1,1) = 0.

fn colville_f(x: &[f64]) -> f64 {
    100.0 * (x[0] * x[0] - x[1]).powi(2)
        + (x[0] - 1.0).powi(2)
        + (x[2] - 1.0).powi(2)
        + 90.0 * (x[2] * x[2] - x[3]).powi(2)
        + 10.1 * ((x[1] - 1.0).powi(2) + (x[3] - 1.0).powi(2))
        + 19.8 * (x[1] - 1.0) * (x[3] - 1.0)
}

fn colville_grad(x: &[f64]) -> Vec<f64> {
    vec![
        400.0 * x[0] * (x[0] * x[0] - x[1]) + 2.0 * (x[0] - 1.0),
        -200.0 * (x[0] * x[0] - x[1]) + 20.2 * (x[1] - 1.0) + 19.8 * (x[3] - 1.0),
        2.0 * (x[2] - 1.0) + 360.0 * x[2] * (x[2] * x[2] - x[3]),
        -180.0 * (x[2] * x[2] - x[3]) + 20.2 * (x[3] - 1.0) + 19.8 * (x[1] - 1.0),
    ]
}

pub(super) fn colville(n: usize) -> Result<Problem, Error> {
    fixed_dim("colville", 4, n)?;
    Ok(problem(
        "colville",
        4,
        colville_f,
        colville_grad,
        None,
        Some(0.0),
        Some(vec![1.0; 4]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Schaffer N.2: global minimum f(0, 0) = 0.

fn schaffer2_f(x: &[f64]) -> f64 {
    let u = x[0] * x[0] - x[1] * x[1];
    let q = 1.0 + 0.001 * (x[0] * x[0] + x[1] * x[1]);
    0.5 + (u.sin().powi(2) - 0.5) / (q * q)
}

fn schaffer2_grad(x: &[f64]) -> Vec<f64> {
    let u = x[0] * x[0] - x[1] * x[1];
    let q = 1.0 + 0.001 * (x[0] * x[0] + x[1] * x[1]);
    let num = u.sin().powi(2) - 0.5;
    vec![
        2.0 * x[0] * (2.0 * u).sin() / (q * q) - 0.004 * x[0] * num / (q * q * q),
        -2.0 * x[1] * (2.0 * u).sin() / (q * q) - 0.004 * x[1] * num / (q * q * q),
    ]
}

pub(super) fn schaffer2(n: usize) -> Result<Problem, Error> {
    fixed_dim("schaffer2", 2, n)?;
    Ok(problem(
        "schaffer2",
        2,
        schaffer2_f,
        schaffer2_grad,
        None,
        Some(0.0),
        Some(vec![0.0, 0.0]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Schaffer N.4: global minimum 0.2925786... at (0, +-1.2531318...).

const SCHAFFER4_MIN: f64 = 0.292_578_632_035_980_55;
const SCHAFFER4_Y: f64 = 1.253_131_831_463_733_2;

fn schaffer4_f(x: &[f64]) -> f64 {
    let u = x[0] * x[0] - x[1] * x[1];
    let q = 1.0 + 0.001 * (x[0] * x[0] + x[1] * x[1]);
    0.5 + (u.abs().sin().cos().powi(2) - 0.5) / (q * q)
}

fn schaffer4_grad(x: &[f64]) -> Vec<f64> {
    let u = x[0] * x[0] - x[1] * x[1];
    let q = 1.0 + 0.001 * (x[0] * x[0] + x[1] * x[1]);
    let v = u.abs().sin();
    let num = v.cos().powi(2) - 0.5;
    // d cos^2(sin|u|) = -sin(2 sin|u|) cos|u| sgn(u) du
    let core = -(2.0 * v).sin() * u.abs().cos() * sgn(u);
    vec![
        core * 2.0 * x[0] / (q * q) - 0.004 * x[0] * num / (q * q * q),
        core * (-2.0 * x[1]) / (q * q) - 0.004 * x[1] * num / (q * q * q),
    ]
}

pub(super) fn schaffer4(n: usize) -> Result<Problem, Error> {
    fixed_dim("schaffer4", 2, n)?;
    Ok(problem(
        "schaffer4",
        2,
        schaffer4_f,
        schaffer4_grad,
        None,
        Some(SCHAFFER4_MIN),
        Some(vec![0.0, SCHAFFER4_Y]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Bohachevsky (first form): global minimum f(0, 0) = 0.

fn bohachevsky_f(x: &[f64]) -> f64 {
    x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * (3.0 * PI * x[0]).cos() - 0.4 * (4.0 * PI * x[1]).cos()
        + 0.7
}

fn bohachevsky_grad(x: &[f64]) -> Vec<f64> {
    vec![
        2.0 * x[0] + 0.9 * PI * (3.0 * PI * x[0]).sin(),
        4.0 * x[1] + 1.6 * PI * (4.0 * PI * x[1]).sin(),
    ]
}

pub(super) fn bohachevsky(n: usize) -> Result<Problem, Error> {
    fixed_dim("bohachevsky", 2, n)?;
    Ok(problem(
        "bohachevsky",
        2,
        bohachevsky_f,
        bohachevsky_grad,
        None,
        Some(0.0),
        Some(vec![0.0, 0.0]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Three-Hump Camel: global minimum f(0, 0) = 0.

fn three_hump_f(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    2.0 * a * a - 1.05 * a.powi(4) + a.powi(6) / 6.0 + a * b + b * b
}

fn three_hump_grad(x: &[f64]) -> Vec<f64> {
    let (a, b) = (x[0], x[1]);
    vec![4.0 * a - 4.2 * a.powi(3) + a.powi(5) + b, a + 2.0 * b]
}

pub(super) fn three_hump_camel(n: usize) -> Result<Problem, Error> {
    fixed_dim("three-hump-camel", 2, n)?;
    Ok(problem(
        "three-hump-camel",
        2,
        three_hump_f,
        three_hump_grad,
        None,
        Some(0.0),
        Some(vec![0.0, 0.0]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Six-Hump Camel: two global minimizers with f = -1.0316284...

const SIX_HUMP_MIN: f64 = -1.031_628_453_489_877_4;
const SIX_HUMP_X: f64 = 0.089_842_013_100_316_58;
const SIX_HUMP_Y: f64 = -0.712_656_403_020_741_04;

fn six_hump_f(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (4.0 - 2.1 * a * a + a.powi(4) / 3.0) * a * a + a * b + (-4.0 + 4.0 * b * b) * b * b
}

fn six_hump_grad(x: &[f64]) -> Vec<f64> {
    let (a, b) = (x[0], x[1]);
    vec![
        8.0 * a - 8.4 * a.powi(3) + 2.0 * a.powi(5) + b,
        a - 8.0 * b + 16.0 * b.powi(3),
    ]
}

pub(super) fn six_hump_camel(n: usize) -> Result<Problem, Error> {
    fixed_dim("six-hump-camel", 2, n)?;
    Ok(problem(
        "six-hump-camel",
        2,
        six_hump_f,
        six_hump_grad,
        None,
        Some(SIX_HUMP_MIN),
        Some(vec![SIX_HUMP_X, SIX_HUMP_Y]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Drop-Wave: global minimum f(0, 0) = -1; radial ripples elsewhere.

fn drop_wave_f(x: &[f64]) -> f64 {
    let r2 = x[0] * x[0] + x[1] * x[1];
    let r = r2.sqrt();
    -(1.0 + (12.0 * r).cos()) / (0.5 * r2 + 2.0)
}

fn drop_wave_grad(x: &[f64]) -> Vec<f64> {
    let r2 = x[0] * x[0] + x[1] * x[1];
    if r2 == 0.0 {
        return vec![0.0, 0.0];
    }
    let r = r2.sqrt();
    let n = 1.0 + (12.0 * r).cos();
    let d = 0.5 * r2 + 2.0;
    let common = (12.0 * (12.0 * r).sin() * d / r + n) / (d * d);
    vec![x[0] * common, x[1] * common]
}

pub(super) fn drop_wave(n: usize) -> Result<Problem, Error> {
    fixed_dim("drop-wave", 2, n)?;
    Ok(problem(
        "drop-wave",
        2,
        drop_wave_f,
        drop_wave_grad,
        None,
        Some(-1.0),
        Some(vec![0.0, 0.0]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Hartmann 3-D: four Gaussian wells. Global minimum -3.8627821...

const HARTMANN_ALPHA: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMANN_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMANN_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.0381_5, 0.5743, 0.8828],
];
const HARTMANN3_MIN: f64 = -3.862_782_147_820_755_1;
const HARTMANN3_ARGMIN: [f64; 3] = [
    0.114_614_338_589_664_72,
    0.555_648_849_971_857_51,
    0.852_546_953_520_865_96,
];

fn hartmann3_f(x: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        let inner: f64 = (0..3)
            .map(|j| HARTMANN_A[i][j] * (x[j] - HARTMANN_P[i][j]).powi(2))
            .sum();
        s -= HARTMANN_ALPHA[i] * (-inner).exp();
    }
    s
}

fn hartmann3_grad(x: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; 3];
    for i in 0..4 {
        let inner: f64 = (0..3)
            .map(|j| HARTMANN_A[i][j] * (x[j] - HARTMANN_P[i][j]).powi(2))
            .sum();
        let e = HARTMANN_ALPHA[i] * (-inner).exp();
        for j in 0..3 {
            g[j] += e * 2.0 * HARTMANN_A[i][j] * (x[j] - HARTMANN_P[i][j]);
        }
    }
    g
}

pub(super) fn hartmann3(n: usize) -> Result<Problem, Error> {
    fixed_dim("hartmann3", 3, n)?;
    Ok(problem(
        "hartmann3",
        3,
        hartmann3_f,
        hartmann3_grad,
        None,
        Some(HARTMANN3_MIN),
        Some(HARTMANN3_ARGMIN.to_vec()),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Holder Table: reference minimum -19.2085025... at (+-8.055, +-9.6646).
// Unbounded below far from the origin; the reference is the classical
// four-fold minimizer orbit.

const HOLDER_MIN: f64 = -19.208_502_567_886_732;
const HOLDER_X: f64 = 8.055_023_475_729_806_5;
const HOLDER_Y: f64 = 9.664_590_019_242_652_9;

fn holder_f(x: &[f64]) -> f64 {
    let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
    let g = x[0].sin() * x[1].cos() * (1.0 - r / PI).abs().exp();
    -g.abs()
}

fn holder_grad(x: &[f64]) -> Vec<f64> {
    let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
    if r == 0.0 {
        return vec![0.0, 0.0];
    }
    let w = (1.0 - r / PI).abs();
    let e = w.exp();
    let g = x[0].sin() * x[1].cos() * e;
    let dw = -sgn(1.0 - r / PI) / (PI * r);
    let dgx = x[0].cos() * x[1].cos() * e + g * dw * x[0];
    let dgy = -x[0].sin() * x[1].sin() * e + g * dw * x[1];
    vec![-sgn(g) * dgx, -sgn(g) * dgy]
}

pub(super) fn holder_table(n: usize) -> Result<Problem, Error> {
    fixed_dim("holder-table", 2, n)?;
    Ok(problem(
        "holder-table",
        2,
        holder_f,
        holder_grad,
        None,
        Some(HOLDER_MIN),
        Some(vec![HOLDER_X, HOLDER_Y]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Eggholder: reference minimum -959.6406627... at (512, 404.2318) on the
// [-512, 512]^2 box; unconstrained search legitimately finds lower values,
// so no stationary reference minimizer is recorded.

const EGGHOLDER_MIN: f64 = -959.640_662_720_850_8;

fn eggholder_f(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let u = b + a / 2.0 + 47.0;
    let v = a - (b + 47.0);
    -(b + 47.0) * u.abs().sqrt().sin() - a * v.abs().sqrt().sin()
}

fn eggholder_grad(x: &[f64]) -> Vec<f64> {
    let (a, b) = (x[0], x[1]);
    let u = b + a / 2.0 + 47.0;
    let v = a - (b + 47.0);
    let su = u.abs().sqrt();
    let sv = v.abs().sqrt();
    let du = dsqrt_abs(u);
    let dv = dsqrt_abs(v);
    vec![
        -(b + 47.0) * su.cos() * du * 0.5 - sv.sin() - a * sv.cos() * dv,
        -su.sin() - (b + 47.0) * su.cos() * du + a * sv.cos() * dv,
    ]
}

pub(super) fn eggholder(n: usize) -> Result<Problem, Error> {
    fixed_dim("eggholder", 2, n)?;
    Ok(problem(
        "eggholder",
        2,
        eggholder_f,
        eggholder_grad,
        None,
        Some(EGGHOLDER_MIN),
        None,
        false,
        true,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Michalewicz (m = 10): steep narrow wells. Global minimum -1.8013034...
// in two dimensions.

const MICHALEWICZ_MIN: f64 = -1.801_303_410_098_552_5;
const MICHALEWICZ_ARGMIN: [f64; 2] = [2.202_905_520_172_609_4, 1.570_796_326_794_901_2];

fn michalewicz_f(x: &[f64]) -> f64 {
    -x.iter()
        .enumerate()
        .map(|(i, &v)| {
            let t = ((i + 1) as f64 * v * v / PI).sin();
            v.sin() * t.powi(20)
        })
        .sum::<f64>()
}

fn michalewicz_grad(x: &[f64]) -> Vec<f64> {
    x.iter()
        .enumerate()
        .map(|(i, &v)| {
            let k = (i + 1) as f64;
            let arg = k * v * v / PI;
            let t = arg.sin();
            -(v.cos() * t.powi(20)
                + v.sin() * 20.0 * t.powi(19) * arg.cos() * 2.0 * k * v / PI)
        })
        .collect()
}

pub(super) fn michalewicz(n: usize) -> Result<Problem, Error> {
    fixed_dim("michalewicz", 2, n)?;
    Ok(problem(
        "michalewicz",
        2,
        michalewicz_f,
        michalewicz_grad,
        None,
        Some(MICHALEWICZ_MIN),
        Some(MICHALEWICZ_ARGMIN.to_vec()),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Cross-in-Tray: four global minimizers with f = -2.0626118...

const CROSS_IN_TRAY_MIN: f64 = -2.062_611_870_822_736_9;
const CROSS_IN_TRAY_COORD: f64 = 1.349_406_617_155_894_3;

fn cross_in_tray_f(x: &[f64]) -> f64 {
    let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
    let g = x[0].sin() * x[1].sin() * (100.0 - r / PI).abs().exp();
    -1e-4 * (g.abs() + 1.0).powf(0.1)
}

fn cross_in_tray_grad(x: &[f64]) -> Vec<f64> {
    let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
    if r == 0.0 {
        return vec![0.0, 0.0];
    }
    let w = (100.0 - r / PI).abs();
    let e = w.exp();
    let g = x[0].sin() * x[1].sin() * e;
    let outer = -1e-5 * (g.abs() + 1.0).powf(-0.9) * sgn(g);
    let dw = -sgn(100.0 - r / PI) / (PI * r);
    vec![
        outer * (x[0].cos() * x[1].sin() * e + g * dw * x[0]),
        outer * (x[0].sin() * x[1].cos() * e + g * dw * x[1]),
    ]
}

pub(super) fn cross_in_tray(n: usize) -> Result<Problem, Error> {
    fixed_dim("cross-in-tray", 2, n)?;
    Ok(problem(
        "cross-in-tray",
        2,
        cross_in_tray_f,
        cross_in_tray_grad,
        None,
        Some(CROSS_IN_TRAY_MIN),
        Some(vec![CROSS_IN_TRAY_COORD, CROSS_IN_TRAY_COORD]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Himmelblau: four global minimizers, all with f = 0.

fn himmelblau_f(x: &[f64]) -> f64 {
    (x[0] * x[0] + x[1] - 11.0).powi(2) + (x[0] + x[1] * x[1] - 7.0).powi(2)
}

fn himmelblau_grad(x: &[f64]) -> Vec<f64> {
    let u = x[0] * x[0] + x[1] - 11.0;
    let v = x[0] + x[1] * x[1] - 7.0;
    vec![
        4.0 * x[0] * u + 2.0 * v,
        2.0 * u + 4.0 * x[1] * v,
    ]
}

fn himmelblau_hess(x: &[f64]) -> Matrix {
    let u = x[0] * x[0] + x[1] - 11.0;
    let v = x[0] + x[1] * x[1] - 7.0;
    Matrix::from_rows(&[
        vec![4.0 * u + 8.0 * x[0] * x[0] + 2.0, 4.0 * x[0] + 4.0 * x[1]],
        vec![4.0 * x[0] + 4.0 * x[1], 2.0 + 4.0 * v + 8.0 * x[1] * x[1]],
    ])
    .unwrap()
}

pub(super) fn himmelblau(n: usize) -> Result<Problem, Error> {
    fixed_dim("himmelblau", 2, n)?;
    Ok(problem(
        "himmelblau",
        2,
        himmelblau_f,
        himmelblau_grad,
        Some(himmelblau_hess),
        Some(0.0),
        Some(vec![3.0, 2.0]),
        false,
        false,
        false,
    ))
}

// ---------------------------------------------------------------------------
// Goldstein-Price: global minimum f(0, -1) = 3.

fn goldstein_price_f(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let p = a + b + 1.0;
    let q = 19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b;
    let s = 2.0 * a - 3.0 * b;
    let h = 18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b;
    (1.0 + p * p * q) * (30.0 + s * s * h)
}

fn goldstein_price_grad(x: &[f64]) -> Vec<f64> {
    let (a, b) = (x[0], x[1]);
    let p = a + b + 1.0;
    let q = 19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b;
    let dq = -14.0 + 6.0 * a + 6.0 * b;
    let s = 2.0 * a - 3.0 * b;
    let h = 18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b;
    let dh_da = -32.0 + 24.0 * a - 36.0 * b;
    let dh_db = 48.0 - 36.0 * a + 54.0 * b;
    let t1 = 1.0 + p * p * q;
    let t2 = 30.0 + s * s * h;
    let dt1 = 2.0 * p * q + p * p * dq;
    let dt2_da = 4.0 * s * h + s * s * dh_da;
    let dt2_db = -6.0 * s * h + s * s * dh_db;
    vec![dt1 * t2 + t1 * dt2_da, dt1 * t2 + t1 * dt2_db]
}

pub(super) fn goldstein_price(n: usize) -> Result<Problem, Error> {
    fixed_dim("goldstein-price", 2, n)?;
    Ok(problem(
        "goldstein-price",
        2,
        goldstein_price_f,
        goldstein_price_grad,
        None,
        Some(3.0),
        Some(vec![0.0, -1.0]),
        false,
        false,
        false,
    ))
}
