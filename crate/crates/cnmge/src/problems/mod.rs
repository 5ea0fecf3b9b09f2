//! Catalog of benchmark objectives with analytic gradients, dimensions and
//! reference global minima.
//!
//! Every entry carries an analytic gradient (the pipeline solves `grad f = 0`);
//! a few also carry an analytic Hessian, the rest fall back to the
//! forward-difference Jacobian of the gradient.

mod molecular;
mod scalable;
mod small;

use crate::deflation::{BaseJacobian, DeflatedSystem};
use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::system::FnSystem;

pub use molecular::molecular_energy;

/// A benchmark objective: scalar function, analytic gradient, optional
/// analytic Hessian and reference-minimum metadata.
#[derive(Clone)]
pub struct Problem {
    name: &'static str,
    dim: usize,
    f: fn(&[f64]) -> f64,
    grad: fn(&[f64]) -> Vec<f64>,
    hess: Option<fn(&[f64]) -> Matrix>,
    known_min: Option<f64>,
    known_argmin: Option<Vector>,
    scalable: bool,
    /// Reference minimum comes from a box-constrained listing; an
    /// unconstrained search may legitimately go lower.
    box_reference: bool,
    /// Member of the large-scale half of the suite.
    large_scale: bool,
}

impl Problem {
    /// Builds an ad-hoc problem from an objective and its analytic gradient,
    /// outside the built-in catalog.
    pub fn custom(
        name: &'static str,
        dim: usize,
        f: fn(&[f64]) -> f64,
        grad: fn(&[f64]) -> Vec<f64>,
        hess: Option<fn(&[f64]) -> Matrix>,
    ) -> Self {
        assert!(dim >= 1);
        Self {
            name,
            dim,
            f,
            grad,
            hess,
            known_min: None,
            known_argmin: None,
            scalable: false,
            box_reference: false,
            large_scale: false,
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        (self.f)(x)
    }

    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        (self.grad)(x)
    }

    pub fn objective(&self) -> fn(&[f64]) -> f64 {
        self.f
    }

    pub fn gradient_fn(&self) -> fn(&[f64]) -> Vec<f64> {
        self.grad
    }

    pub fn hessian_fn(&self) -> Option<fn(&[f64]) -> Matrix> {
        self.hess
    }

    pub fn known_min(&self) -> Option<f64> {
        self.known_min
    }

    pub fn known_argmin(&self) -> Option<&Vector> {
        self.known_argmin.as_ref()
    }

    pub fn is_scalable(&self) -> bool {
        self.scalable
    }

    pub fn is_box_reference(&self) -> bool {
        self.box_reference
    }

    pub fn is_large_scale(&self) -> bool {
        self.large_scale
    }

    /// Gradient system `F = grad f` for the continuation Newton solver.
    pub fn gradient_system(&self, fd_step: f64) -> FnSystem<'_> {
        let sys = FnSystem::new(self.dim, &self.grad, fd_step);
        match &self.hess {
            Some(h) => sys.with_jacobian(h),
            None => sys,
        }
    }

    /// Empty deflation registry over this problem's gradient.
    pub fn deflated_system(&self, fd_step: f64, dup_tol: f64) -> DeflatedSystem<'_> {
        let base_jacobian = match &self.hess {
            Some(h) => BaseJacobian::Analytic(h),
            None => BaseJacobian::FiniteDifference { step: fd_step },
        };
        DeflatedSystem::new(self.dim, &self.grad, base_jacobian, dup_tol)
    }
}

/// Internal constructor used by the per-family modules.
#[allow(clippy::too_many_arguments)]
pub(crate) fn problem(
    name: &'static str,
    dim: usize,
    f: fn(&[f64]) -> f64,
    grad: fn(&[f64]) -> Vec<f64>,
    hess: Option<fn(&[f64]) -> Matrix>,
    known_min: Option<f64>,
    known_argmin: Option<Vec<f64>>,
    scalable: bool,
    box_reference: bool,
    large_scale: bool,
) -> Problem {
    Problem {
        name,
        dim,
        f,
        grad,
        hess,
        known_min,
        known_argmin: known_argmin.map(|v| Vector::new(v).expect("finite reference argmin")),
        scalable,
        box_reference,
        large_scale,
    }
}

type Builder = fn(usize) -> Result<Problem, Error>;

struct Entry {
    name: &'static str,
    default_dim: usize,
    builder: Builder,
}

/// Catalog order follows the benchmark suite numbering: scalable problems
/// first, then the fixed small-scale set.
const ENTRIES: &[Entry] = &[
    Entry {
        name: "molecular-energy",
        default_dim: 100,
        builder: molecular::build,
    },
    Entry {
        name: "ackley",
        default_dim: 100,
        builder: scalable::ackley,
    },
    Entry {
        name: "levy",
        default_dim: 100,
        builder: scalable::levy,
    },
    Entry {
        name: "schwefel",
        default_dim: 100,
        builder: scalable::schwefel,
    },
    Entry {
        name: "rastrigin",
        default_dim: 100,
        builder: scalable::rastrigin,
    },
    Entry {
        name: "styblinski-tang",
        default_dim: 100,
        builder: scalable::styblinski_tang,
    },
    Entry {
        name: "trid",
        default_dim: 100,
        builder: scalable::trid,
    },
    Entry {
        name: "sum-squares",
        default_dim: 100,
        builder: scalable::sum_squares,
    },
    Entry {
        name: "sphere",
        default_dim: 100,
        builder: scalable::sphere,
    },
    Entry {
        name: "rotated-hyper-ellipsoid",
        default_dim: 100,
        builder: scalable::rotated_hyper_ellipsoid,
    },
    Entry {
        name: "zakharov",
        default_dim: 100,
        builder: scalable::zakharov,
    },
    Entry {
        name: "dixon-price",
        default_dim: 100,
        builder: scalable::dixon_price,
    },
    Entry {
        name: "rosenbrock",
        default_dim: 100,
        builder: scalable::rosenbrock,
    },
    Entry {
        name: "powell",
        default_dim: 100,
        builder: scalable::powell,
    },
    Entry {
        name: "extended-psc1",
        default_dim: 100,
        builder: scalable::extended_psc1,
    },
    Entry {
        name: "griewank",
        default_dim: 10,
        builder: scalable::griewank,
    },
    Entry {
        name: "levy13",
        default_dim: 2,
        builder: small::levy13,
    },
    Entry {
        name: "beale",
        default_dim: 2,
        builder: small::beale,
    },
    Entry {
        name: "easom",
        default_dim: 2,
        builder: small::easom,
    },
    Entry {
        name: "branin",
        default_dim: 2,
        builder: small::branin,
    },
    Entry {
        name: "booth",
        default_dim: 2,
        builder: small::booth,
    },
    Entry {
        name: "matyas",
        default_dim: 2,
        builder: small::matyas,
    },
    Entry {
        name: "mccormick",
        default_dim: 2,
        builder: small::mccormick,
    },
    Entry {
        name: "colville",
        default_dim: 4,
        builder: small::colville,
    },
    Entry {
        name: "schaffer2",
        default_dim: 2,
        builder: small::schaffer2,
    },
    Entry {
        name: "bohachevsky",
        default_dim: 2,
        builder: small::bohachevsky,
    },
    Entry {
        name: "three-hump-camel",
        default_dim: 2,
        builder: small::three_hump_camel,
    },
    Entry {
        name: "six-hump-camel",
        default_dim: 2,
        builder: small::six_hump_camel,
    },
    Entry {
        name: "drop-wave",
        default_dim: 2,
        builder: small::drop_wave,
    },
    Entry {
        name: "hartmann3",
        default_dim: 3,
        builder: small::hartmann3,
    },
    Entry {
        name: "schaffer4",
        default_dim: 2,
        builder: small::schaffer4,
    },
    Entry {
        name: "holder-table",
        default_dim: 2,
        builder: small::holder_table,
    },
    Entry {
        name: "eggholder",
        default_dim: 2,
        builder: small::eggholder,
    },
    Entry {
        name: "michalewicz",
        default_dim: 2,
        builder: small::michalewicz,
    },
    Entry {
        name: "cross-in-tray",
        default_dim: 2,
        builder: small::cross_in_tray,
    },
    Entry {
        name: "himmelblau",
        default_dim: 2,
        builder: small::himmelblau,
    },
    Entry {
        name: "goldstein-price",
        default_dim: 2,
        builder: small::goldstein_price,
    },
];

/// All catalog problems at their default dimensions, in suite order.
pub fn catalog() -> Vec<Problem> {
    ENTRIES
        .iter()
        .map(|e| (e.builder)(e.default_dim).expect("default dimension is valid"))
        .collect()
}

/// All registered problem names, in suite order.
pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Looks a problem up by name, optionally overriding the dimension for
/// scalable problems. Names are case-insensitive; spaces and underscores
/// match dashes.
pub fn by_name(name: &str, dim: Option<usize>) -> Result<Problem, Error> {
    let normalized: String = name
        .trim()
        .to_ascii_lowercase()
        .chars()
        .map(|c| if c == ' ' || c == '_' { '-' } else { c })
        .collect();
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == normalized)
        .ok_or(Error::UnknownProblem {
            name: name.to_string(),
        })?;
    let d = dim.unwrap_or(entry.default_dim);
    let p = (entry.builder)(d)?;
    if dim.is_some() && !p.is_scalable() && d != entry.default_dim {
        return Err(Error::InvalidDimension {
            name: entry.name,
            dim: d,
        });
    }
    Ok(p)
}
