//! Scalable benchmark objectives (any dimension).

use super::{problem, Problem};
use crate::error::Error;
use crate::linalg::Matrix;
use std::f64::consts::{E, PI};

fn invalid(name: &'static str, dim: usize) -> Error {
    Error::InvalidDimension { name, dim }
}

// ---------------------------------------------------------------------------
// Sphere: unimodal, convex. Global minimum f(0,...,0) = 0.

fn sphere_f(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn sphere_grad(x: &[f64]) -> Vec<f64> {
    x.iter().map(|v| 2.0 * v).collect()
}

fn sphere_hess(x: &[f64]) -> Matrix {
    let mut h = Matrix::zeros(x.len());
    for i in 0..x.len() {
        h.set(i, i, 2.0);
    }
    h
}

pub(super) fn sphere(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(invalid("sphere", n));
    }
    Ok(problem(
        "sphere",
        n,
        sphere_f,
        sphere_grad,
        Some(sphere_hess),
        Some(0.0),
        Some(vec![0.0; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Sum Squares: f = sum i x_i^2. Global minimum 0 at the origin.

fn sum_squares_f(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v * v)
        .sum()
}

fn sum_squares_grad(x: &[f64]) -> Vec<f64> {
    x.iter()
        .enumerate()
        .map(|(i, v)| 2.0 * (i + 1) as f64 * v)
        .collect()
}

fn sum_squares_hess(x: &[f64]) -> Matrix {
    let mut h = Matrix::zeros(x.len());
    for i in 0..x.len() {
        h.set(i, i, 2.0 * (i + 1) as f64);
    }
    h
}

pub(super) fn sum_squares(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(invalid("sum-squares", n));
    }
    Ok(problem(
        "sum-squares",
        n,
        sum_squares_f,
        sum_squares_grad,
        Some(sum_squares_hess),
        Some(0.0),
        Some(vec![0.0; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Rastrigin: highly multimodal with a regular lattice of local minima.
// Global minimum f(0,...,0) = 0.

fn rastrigin_f(x: &[f64]) -> f64 {
    10.0 * x.len() as f64
        + x.iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos())
            .sum::<f64>()
}

fn rastrigin_grad(x: &[f64]) -> Vec<f64> {
    x.iter()
        .map(|v| 2.0 * v + 20.0 * PI * (2.0 * PI * v).sin())
        .collect()
}

fn rastrigin_hess(x: &[f64]) -> Matrix {
    let mut h = Matrix::zeros(x.len());
    for (i, v) in x.iter().enumerate() {
        h.set(i, i, 2.0 + 40.0 * PI * PI * (2.0 * PI * v).cos());
    }
    h
}

pub(super) fn rastrigin(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(invalid("rastrigin", n));
    }
    Ok(problem(
        "rastrigin",
        n,
        rastrigin_f,
        rastrigin_grad,
        Some(rastrigin_hess),
        Some(0.0),
        Some(vec![0.0; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Ackley: nearly flat outer region with a deep well at the origin. Global
// minimum f(0,...,0) = 0; the well has a cone vertex, so the gradient at the
// exact origin is taken as the zero subgradient.

fn ackley_f(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    let sum_cos: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum();
    -20.0 * (-0.2 * (sum_sq / n).sqrt()).exp() - (sum_cos / n).exp() + 20.0 + E
}

fn ackley_grad(x: &[f64]) -> Vec<f64> {
    let n = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    if sum_sq == 0.0 {
        return vec![0.0; x.len()];
    }
    let root = (sum_sq / n).sqrt();
    let sum_cos: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum();
    let radial = 20.0 * 0.2 * (-0.2 * root).exp() / (n * root);
    let wave = (sum_cos / n).exp() * 2.0 * PI / n;
    x.iter()
        .map(|v| radial * v + wave * (2.0 * PI * v).sin())
        .collect()
}

pub(super) fn ackley(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(invalid("ackley", n));
    }
    Ok(problem(
        "ackley",
        n,
        ackley_f,
        ackley_grad,
        None,
        Some(0.0),
        Some(vec![0.0; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Levy: w_i = 1 + (x_i - 1)/4. Global minimum f(1,...,1) = 0.

fn levy_f(x: &[f64]) -> f64 {
    let n = x.len();
    let w = |v: f64| 1.0 + (v - 1.0) / 4.0;
    let w1 = w(x[0]);
    let wn = w(x[n - 1]);
    let mut s = (PI * w1).sin().powi(2);
    for &v in &x[..n - 1] {
        let wi = w(v);
        s += (wi - 1.0).powi(2) * (1.0 + 10.0 * (PI * wi + 1.0).sin().powi(2));
    }
    s + (wn - 1.0).powi(2) * (1.0 + (2.0 * PI * wn).sin().powi(2))
}

fn levy_grad(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let w = |v: f64| 1.0 + (v - 1.0) / 4.0;
    let mut g = vec![0.0; n];
    let w1 = w(x[0]);
    g[0] += (PI / 4.0) * (2.0 * PI * w1).sin();
    for (j, &v) in x[..n - 1].iter().enumerate() {
        let wj = w(v);
        g[j] += 0.25
            * (2.0 * (wj - 1.0) * (1.0 + 10.0 * (PI * wj + 1.0).sin().powi(2))
                + 10.0 * PI * (wj - 1.0).powi(2) * (2.0 * (PI * wj + 1.0)).sin());
    }
    let wn = w(x[n - 1]);
    g[n - 1] += 0.25
        * (2.0 * (wn - 1.0) * (1.0 + (2.0 * PI * wn).sin().powi(2))
            + 2.0 * PI * (wn - 1.0).powi(2) * (4.0 * PI * wn).sin());
    g
}

pub(super) fn levy(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(invalid("levy", n));
    }
    Ok(problem(
        "levy",
        n,
        levy_f,
        levy_grad,
        None,
        Some(0.0),
        Some(vec![1.0; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Schwefel: f = 418.9829 n - sum x sin(sqrt|x|). The per-dimension minimizer
// sits at 420.9687...; the canonical constant leaves a residual of about
// 1.27e-5 per dimension at the true minimum.

const SCHWEFEL_ARGMIN: f64 = 420.968_746_359_982_03;
const SCHWEFEL_RESIDUAL_PER_DIM: f64 = 1.272_756_629_37e-5;

fn schwefel_f(x: &[f64]) -> f64 {
    418.9829 * x.len() as f64
        - x.iter()
            .map(|v| v * v.abs().sqrt().sin())
            .sum::<f64>()
}

fn schwefel_grad(x: &[f64]) -> Vec<f64> {
    x.iter()
        .map(|v| {
            let s = v.abs().sqrt();
            -(s.sin() + 0.5 * s * s.cos())
        })
        .collect()
}

pub(super) fn schwefel(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(invalid("schwefel", n));
    }
    Ok(problem(
        "schwefel",
        n,
        schwefel_f,
        schwefel_grad,
        None,
        Some(SCHWEFEL_RESIDUAL_PER_DIM * n as f64),
        Some(vec![SCHWEFEL_ARGMIN; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Styblinski-Tang: f = sum (x^4 - 16 x^2 + 5 x)/2, separable with two wells
// per coordinate. Global minimum at x_i = -2.9035340...

const ST_ARGMIN: f64 = -2.903_534_027_771_177_1;
const ST_MIN_PER_DIM: f64 = -39.166_165_703_771_415;

fn styblinski_tang_f(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| (v.powi(4) - 16.0 * v * v + 5.0 * v) / 2.0)
        .sum()
}

fn styblinski_tang_grad(x: &[f64]) -> Vec<f64> {
    x.iter().map(|v| 2.0 * v.powi(3) - 16.0 * v + 2.5).collect()
}

fn styblinski_tang_hess(x: &[f64]) -> Matrix {
    let mut h = Matrix::zeros(x.len());
    for (i, v) in x.iter().enumerate() {
        h.set(i, i, 6.0 * v * v - 16.0);
    }
    h
}

pub(super) fn styblinski_tang(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(invalid("styblinski-tang", n));
    }
    Ok(problem(
        "styblinski-tang",
        n,
        styblinski_tang_f,
        styblinski_tang_grad,
        Some(styblinski_tang_hess),
        Some(ST_MIN_PER_DIM * n as f64),
        Some(vec![ST_ARGMIN; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Trid: convex quadratic with coupling. Global minimum -n(n+4)(n-1)/6 at
// x_i = i(n+1-i).

fn trid_f(x: &[f64]) -> f64 {
    let quad: f64 = x.iter().map(|v| (v - 1.0).powi(2)).sum();
    let cross: f64 = x.windows(2).map(|w| w[0] * w[1]).sum();
    quad - cross
}

fn trid_grad(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    (0..n)
        .map(|j| {
            let mut g = 2.0 * (x[j] - 1.0);
            if j > 0 {
                g -= x[j - 1];
            }
            if j + 1 < n {
                g -= x[j + 1];
            }
            g
        })
        .collect()
}

fn trid_hess(x: &[f64]) -> Matrix {
    let n = x.len();
    let mut h = Matrix::zeros(n);
    for i in 0..n {
        h.set(i, i, 2.0);
        if i + 1 < n {
            h.set(i, i + 1, -1.0);
            h.set(i + 1, i, -1.0);
        }
    }
    h
}

pub(super) fn trid(n: usize) -> Result<Problem, Error> {
    if n < 2 {
        return Err(invalid("trid", n));
    }
    let nf = n as f64;
    let argmin: Vec<f64> = (1..=n)
        .map(|i| (i as f64) * (nf + 1.0 - i as f64))
        .collect();
    Ok(problem(
        "trid",
        n,
        trid_f,
        trid_grad,
        Some(trid_hess),
        Some(-nf * (nf + 4.0) * (nf - 1.0) / 6.0),
        Some(argmin),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Rotated Hyper-Ellipsoid: f = sum_i (sum_{j<=i} x_j)^2, convex quadratic.

fn rhe_f(x: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut s = 0.0;
    for v in x {
        prefix += v;
        s += prefix * prefix;
    }
    s
}

fn rhe_grad(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    // grad_j = 2 sum_{i >= j} S_i with S_i the i-th prefix sum.
    let mut prefix = 0.0;
    let mut prefixes = Vec::with_capacity(n);
    for v in x {
        prefix += v;
        prefixes.push(prefix);
    }
    let mut suffix = 0.0;
    let mut g = vec![0.0; n];
    for j in (0..n).rev() {
        suffix += prefixes[j];
        g[j] = 2.0 * suffix;
    }
    g
}

fn rhe_hess(x: &[f64]) -> Matrix {
    let n = x.len();
    let mut h = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            h.set(i, j, 2.0 * (n - i.max(j)) as f64);
        }
    }
    h
}

pub(super) fn rotated_hyper_ellipsoid(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(invalid("rotated-hyper-ellipsoid", n));
    }
    Ok(problem(
        "rotated-hyper-ellipsoid",
        n,
        rhe_f,
        rhe_grad,
        Some(rhe_hess),
        Some(0.0),
        Some(vec![0.0; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Zakharov: f = sum x^2 + Q^2 + Q^4 with Q = sum 0.5 i x_i.

fn zakharov_q(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| 0.5 * (i + 1) as f64 * v)
        .sum()
}

fn zakharov_f(x: &[f64]) -> f64 {
    let q = zakharov_q(x);
    x.iter().map(|v| v * v).sum::<f64>() + q * q + q.powi(4)
}

fn zakharov_grad(x: &[f64]) -> Vec<f64> {
    let q = zakharov_q(x);
    let factor = 2.0 * q + 4.0 * q.powi(3);
    x.iter()
        .enumerate()
        .map(|(i, v)| 2.0 * v + factor * 0.5 * (i + 1) as f64)
        .collect()
}

fn zakharov_hess(x: &[f64]) -> Matrix {
    let n = x.len();
    let q = zakharov_q(x);
    let factor = 2.0 + 12.0 * q * q;
    let mut h = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let v = factor * 0.25 * ((i + 1) * (j + 1)) as f64;
            h.set(i, j, v + if i == j { 2.0 } else { 0.0 });
        }
    }
    h
}

pub(super) fn zakharov(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(invalid("zakharov", n));
    }
    Ok(problem(
        "zakharov",
        n,
        zakharov_f,
        zakharov_grad,
        Some(zakharov_hess),
        Some(0.0),
        Some(vec![0.0; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Dixon-Price: global minimum 0 at x_i = 2^(-(2^i - 2)/2^i).

fn dixon_price_f(x: &[f64]) -> f64 {
    let mut s = (x[0] - 1.0).powi(2);
    for i in 1..x.len() {
        s += (i + 1) as f64 * (2.0 * x[i] * x[i] - x[i - 1]).powi(2);
    }
    s
}

fn dixon_price_grad(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut g = vec![0.0; n];
    g[0] = 2.0 * (x[0] - 1.0);
    for i in 1..n {
        let t = (i + 1) as f64 * 2.0 * (2.0 * x[i] * x[i] - x[i - 1]);
        g[i] += t * 4.0 * x[i];
        g[i - 1] -= t;
    }
    g
}

pub(super) fn dixon_price(n: usize) -> Result<Problem, Error> {
    if n < 2 {
        return Err(invalid("dixon-price", n));
    }
    let argmin: Vec<f64> = (1..=n as i32)
        .map(|i| {
            let p = 2f64.powi(i);
            2f64.powf(-(p - 2.0) / p)
        })
        .collect();
    Ok(problem(
        "dixon-price",
        n,
        dixon_price_f,
        dixon_price_grad,
        None,
        Some(0.0),
        Some(argmin),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Rosenbrock: banana valley. Global minimum f(1,...,1) = 0.

fn rosenbrock_f(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (1.0 - w[0]).powi(2))
        .sum()
}

fn rosenbrock_grad(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut g = vec![0.0; n];
    for j in 0..n - 1 {
        g[j] += -400.0 * x[j] * (x[j + 1] - x[j] * x[j]) - 2.0 * (1.0 - x[j]);
        g[j + 1] += 200.0 * (x[j + 1] - x[j] * x[j]);
    }
    g
}

fn rosenbrock_hess(x: &[f64]) -> Matrix {
    let n = x.len();
    let mut h = Matrix::zeros(n);
    for j in 0..n - 1 {
        let d = h.get(j, j) + 1200.0 * x[j] * x[j] - 400.0 * x[j + 1] + 2.0;
        h.set(j, j, d);
        let d1 = h.get(j + 1, j + 1) + 200.0;
        h.set(j + 1, j + 1, d1);
        h.set(j, j + 1, -400.0 * x[j]);
        h.set(j + 1, j, -400.0 * x[j]);
    }
    h
}

pub(super) fn rosenbrock(n: usize) -> Result<Problem, Error> {
    if n < 2 {
        return Err(invalid("rosenbrock", n));
    }
    Ok(problem(
        "rosenbrock",
        n,
        rosenbrock_f,
        rosenbrock_grad,
        Some(rosenbrock_hess),
        Some(0.0),
        Some(vec![1.0; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Powell: groups of four variables, singular Hessian at the minimum.
// Global minimum f(0,...,0) = 0. Dimension must be a multiple of 4.

fn powell_f(x: &[f64]) -> f64 {
    x.chunks_exact(4)
        .map(|c| {
            let t1 = c[0] + 10.0 * c[1];
            let t2 = c[2] - c[3];
            let t3 = c[1] - 2.0 * c[2];
            let t4 = c[0] - c[3];
            t1 * t1 + 5.0 * t2 * t2 + t3.powi(4) + 10.0 * t4.powi(4)
        })
        .sum()
}

fn powell_grad(x: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    for (k, c) in x.chunks_exact(4).enumerate() {
        let b = 4 * k;
        let t1 = c[0] + 10.0 * c[1];
        let t2 = c[2] - c[3];
        let t3 = c[1] - 2.0 * c[2];
        let t4 = c[0] - c[3];
        g[b] = 2.0 * t1 + 40.0 * t4.powi(3);
        g[b + 1] = 20.0 * t1 + 4.0 * t3.powi(3);
        g[b + 2] = 10.0 * t2 - 8.0 * t3.powi(3);
        g[b + 3] = -10.0 * t2 - 40.0 * t4.powi(3);
    }
    g
}

pub(super) fn powell(n: usize) -> Result<Problem, Error> {
    if n < 4 || n % 4 != 0 {
        return Err(invalid("powell", n));
    }
    Ok(problem(
        "powell",
        n,
        powell_f,
        powell_grad,
        None,
        Some(0.0),
        Some(vec![0.0; n]),
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Extended PSC1: pairwise-coupled trigonometric quartic with no published
// closed-form global minimum. Dimension must be even.

fn psc1_f(x: &[f64]) -> f64 {
    x.chunks_exact(2)
        .map(|c| {
            let u = c[0] * c[0] + c[1] * c[1] + c[0] * c[1];
            u * u + c[0].sin().powi(2) + c[1].cos().powi(2)
        })
        .sum()
}

fn psc1_grad(x: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    for (k, c) in x.chunks_exact(2).enumerate() {
        let b = 2 * k;
        let u = c[0] * c[0] + c[1] * c[1] + c[0] * c[1];
        g[b] = 2.0 * u * (2.0 * c[0] + c[1]) + (2.0 * c[0]).sin();
        g[b + 1] = 2.0 * u * (2.0 * c[1] + c[0]) - (2.0 * c[1]).sin();
    }
    g
}

pub(super) fn extended_psc1(n: usize) -> Result<Problem, Error> {
    if n < 2 || n % 2 != 0 {
        return Err(invalid("extended-psc1", n));
    }
    Ok(problem(
        "extended-psc1",
        n,
        psc1_f,
        psc1_grad,
        None,
        None,
        None,
        true,
        false,
        true,
    ))
}

// ---------------------------------------------------------------------------
// Griewank: f = sum x^2/4000 - prod cos(x_i/sqrt(i)) + 1. Global minimum 0
// at the origin.

fn griewank_f(x: &[f64]) -> f64 {
    let s: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let p: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    s - p + 1.0
}

fn griewank_grad(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    // Leave-one-out cosine products via prefix/suffix scans, so zero cosines
    // stay harmless.
    let cos: Vec<f64> = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .collect();
    let mut prefix = vec![1.0; n + 1];
    for i in 0..n {
        prefix[i + 1] = prefix[i] * cos[i];
    }
    let mut suffix = vec![1.0; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] * cos[i];
    }
    (0..n)
        .map(|j| {
            let root = ((j + 1) as f64).sqrt();
            let rest = prefix[j] * suffix[j + 1];
            x[j] / 2000.0 + rest * (x[j] / root).sin() / root
        })
        .collect()
}

pub(super) fn griewank(n: usize) -> Result<Problem, Error> {
    if n < 1 {
        return Err(invalid("griewank", n));
    }
    Ok(problem(
        "griewank",
        n,
        griewank_f,
        griewank_grad,
        None,
        Some(0.0),
        Some(vec![0.0; n]),
        true,
        false,
        false,
    ))
}
