//! Nonlinear-system abstraction consumed by the continuation Newton solver.

use crate::error::Error;
use crate::linalg::{fd_jacobian, Matrix};

/// A square system of nonlinear equations `F(x) = 0` with a Jacobian.
pub trait NonlinearSystem: Sync {
    fn dim(&self) -> usize;

    /// Residual `F(x)`. Returns an error when the evaluation is undefined
    /// or produces non-finite values.
    fn eval(&self, x: &[f64]) -> Result<Vec<f64>, Error>;

    /// Jacobian of `F` at `x`, analytic or approximated.
    fn jacobian(&self, x: &[f64]) -> Result<Matrix, Error>;
}

/// System backed by plain closures, with an optional analytic Jacobian.
/// Falls back to the forward-difference Jacobian when none is given.
pub struct FnSystem<'a> {
    dim: usize,
    f: &'a (dyn Fn(&[f64]) -> Vec<f64> + Sync),
    jac: Option<&'a (dyn Fn(&[f64]) -> Matrix + Sync)>,
    fd_step: f64,
}

impl<'a> FnSystem<'a> {
    pub fn new(dim: usize, f: &'a (dyn Fn(&[f64]) -> Vec<f64> + Sync), fd_step: f64) -> Self {
        assert!(fd_step > 0.0);
        Self {
            dim,
            f,
            jac: None,
            fd_step,
        }
    }

    pub fn with_jacobian(mut self, jac: &'a (dyn Fn(&[f64]) -> Matrix + Sync)) -> Self {
        self.jac = Some(jac);
        self
    }
}

impl NonlinearSystem for FnSystem<'_> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[f64]) -> Result<Vec<f64>, Error> {
        if x.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: x.len(),
            });
        }
        let v = (self.f)(x);
        if v.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: v.len(),
            });
        }
        if v.iter().any(|t| !t.is_finite()) {
            return Err(Error::NonFinite {
                context: "residual evaluation",
            });
        }
        Ok(v)
    }

    fn jacobian(&self, x: &[f64]) -> Result<Matrix, Error> {
        match self.jac {
            Some(j) => Ok(j(x)),
            None => fd_jacobian(self.f, x, self.fd_step),
        }
    }
}
