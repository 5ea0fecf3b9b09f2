//! Deflation of found roots: builds `G_k(x) = prod_i (alpha_i / ||x - x_i||_1) F(x)`
//! so that registered roots become poles and the solver is pushed toward new
//! ones.
//!
//! The plain reciprocal-distance deflation `G_k = F / (||x-x_1|| ... ||x-x_k||)`
//! underflows or overflows once more than a handful of roots are registered.
//! This module implements the rescaled form with per-root scales `alpha_i`
//! (the 1-norm of the root, or `n` for roots near the origin) and accumulates
//! the product in log space.

use crate::error::Error;
use crate::linalg::{fd_jacobian, one_norm, Matrix, Vector};
use crate::system::NonlinearSystem;

/// Distance (1-norm) under which a point counts as sitting on a root and the
/// deflation scale is numerically meaningless.
pub const AT_ROOT_TOL: f64 = 1e-13;

/// Default duplicate tolerance between registered roots (infinity norm).
pub const DEFAULT_DUP_TOL: f64 = 1e-4;

/// Near-zero cutoff in the per-root scale rule.
const ALPHA_ZERO_TOL: f64 = 1e-6;

/// Clamp bounds for the accumulated deflation scale.
const SCALE_MIN: f64 = 1e-300;
const SCALE_MAX: f64 = 1e300;

/// Per-root scale: `n` for roots with tiny 1-norm, the 1-norm otherwise.
pub fn alpha_for(root: &[f64], n: usize) -> f64 {
    debug_assert_eq!(root.len(), n);
    let l1 = one_norm(root);
    if l1 <= ALPHA_ZERO_TOL {
        n as f64
    } else {
        l1
    }
}

/// Sign with `sgn(0) = 0`, the sub-differential element used for `|.|_1`.
fn sgn(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// How the Jacobian of the underlying system is obtained.
#[derive(Clone, Copy)]
pub enum BaseJacobian<'a> {
    Analytic(&'a (dyn Fn(&[f64]) -> Matrix + Sync)),
    FiniteDifference { step: f64 },
}

/// `F` together with the registry of deflated roots and their scales.
///
/// Values are immutable once built; [`DeflatedSystem::register_root`] returns
/// a new system, so a registry for a given `k` can be shared freely.
pub struct DeflatedSystem<'a> {
    base_f: &'a (dyn Fn(&[f64]) -> Vec<f64> + Sync),
    base_jacobian: BaseJacobian<'a>,
    dim: usize,
    dup_tol: f64,
    roots: Vec<Vector>,
    alphas: Vec<f64>,
}

impl<'a> DeflatedSystem<'a> {
    pub fn new(
        dim: usize,
        base_f: &'a (dyn Fn(&[f64]) -> Vec<f64> + Sync),
        base_jacobian: BaseJacobian<'a>,
        dup_tol: f64,
    ) -> Self {
        assert!(dim >= 1);
        assert!(dup_tol > 0.0);
        Self {
            base_f,
            base_jacobian,
            dim,
            dup_tol,
            roots: Vec::new(),
            alphas: Vec::new(),
        }
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    /// True when `x` sits on a registered root (within [`AT_ROOT_TOL`] in the
    /// 1-norm), i.e. where the deflated function is undefined.
    pub fn is_at_registered_root(&self, x: &[f64]) -> bool {
        self.roots
            .iter()
            .any(|r| l1_distance(x, r) < AT_ROOT_TOL)
    }

    /// Appends `root` and its scale. Fails when the root is within `dup_tol`
    /// (infinity norm) of an already registered one, which signals that a
    /// deflated solve reconverged to a known point.
    pub fn register_root(&self, root: Vector) -> Result<Self, Error> {
        if root.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: root.len(),
            });
        }
        for (i, r) in self.roots.iter().enumerate() {
            let d = root
                .iter()
                .zip(r.iter())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            if d <= self.dup_tol {
                return Err(Error::DuplicateRoot { root_index: i });
            }
        }
        let alpha = alpha_for(&root, self.dim);
        let mut next = Self {
            base_f: self.base_f,
            base_jacobian: self.base_jacobian,
            dim: self.dim,
            dup_tol: self.dup_tol,
            roots: self.roots.clone(),
            alphas: self.alphas.clone(),
        };
        next.roots.push(root);
        next.alphas.push(alpha);
        Ok(next)
    }

    /// 1-norm distances to every registered root, or the index of a root the
    /// point effectively sits on.
    fn distances(&self, x: &[f64]) -> Result<Vec<f64>, Error> {
        let mut out = Vec::with_capacity(self.roots.len());
        for (i, r) in self.roots.iter().enumerate() {
            let d = l1_distance(x, r);
            if d < AT_ROOT_TOL {
                return Err(Error::AtDeflatedRoot { root_index: i });
            }
            out.push(d);
        }
        Ok(out)
    }

    /// Accumulated scale `prod_i alpha_i / d_i` in log space, clamped.
    fn scale(&self, distances: &[f64]) -> f64 {
        let log_c: f64 = self
            .alphas
            .iter()
            .zip(distances)
            .map(|(a, d)| a.ln() - d.ln())
            .sum();
        log_c.exp().clamp(SCALE_MIN, SCALE_MAX)
    }

    /// Deflated residual `G_k(x) = c(x) F(x)`. With an empty registry this is
    /// `F(x)` exactly.
    pub fn eval_g(&self, x: &[f64]) -> Result<Vec<f64>, Error> {
        if x.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: x.len(),
            });
        }
        let f = (self.base_f)(x);
        if f.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: f.len(),
            });
        }
        if f.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "deflated base residual",
            });
        }
        if self.roots.is_empty() {
            return Ok(f);
        }
        let c = self.scale(&self.distances(x)?);
        let g: Vec<f64> = f.iter().map(|v| c * v).collect();
        if g.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "deflated residual",
            });
        }
        Ok(g)
    }

    /// Sub-differential of the deflated residual:
    /// `c(x) (J(x) + F(x) p(x)^T)` with
    /// `p(x)^T = -sum_i sgn(x - x_i)^T / ||x - x_i||_1`.
    pub fn eval_g_jacobian(&self, x: &[f64]) -> Result<Matrix, Error> {
        let j = self.base_jacobian_at(x)?;
        if self.roots.is_empty() {
            return Ok(j);
        }
        let f = (self.base_f)(x);
        if f.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "deflated base residual",
            });
        }
        let dists = self.distances(x)?;
        let c = self.scale(&dists);
        let mut p = vec![0.0; self.dim];
        for (root, d) in self.roots.iter().zip(&dists) {
            for (pk, (xk, rk)) in p.iter_mut().zip(x.iter().zip(root.iter())) {
                *pk -= sgn(xk - rk) / d;
            }
        }
        let mut out = Matrix::zeros(self.dim);
        for row in 0..self.dim {
            for col in 0..self.dim {
                out.set(row, col, c * (j.get(row, col) + f[row] * p[col]));
            }
        }
        if (0..self.dim).any(|i| (0..self.dim).any(|k| !out.get(i, k).is_finite())) {
            return Err(Error::NonFinite {
                context: "deflated jacobian",
            });
        }
        Ok(out)
    }

    fn base_jacobian_at(&self, x: &[f64]) -> Result<Matrix, Error> {
        match self.base_jacobian {
            BaseJacobian::Analytic(jac) => Ok(jac(x)),
            BaseJacobian::FiniteDifference { step } => fd_jacobian(self.base_f, x, step),
        }
    }
}

impl NonlinearSystem for DeflatedSystem<'_> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[f64]) -> Result<Vec<f64>, Error> {
        self.eval_g(x)
    }

    fn jacobian(&self, x: &[f64]) -> Result<Matrix, Error> {
        self.eval_g_jacobian(x)
    }
}

fn l1_distance(x: &[f64], root: &Vector) -> f64 {
    x.iter()
        .zip(root.iter())
        .map(|(a, b)| (a - b).abs())
        .sum()
}
