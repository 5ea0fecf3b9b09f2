//! Continuation Newton method with trust-region time-step updating.
//!
//! The solver follows the continuation Newton flow `-J(x) dx/dt = F(x)` with
//! the explicit step `x_{k+1} = x_k + (dt/(1+dt)) s_k` where `J s_k = -F_k`,
//! adapting the time step `dt` from the agreement between the predicted and
//! the actual residual reduction. Near a regular solution `dt` doubles every
//! iteration and the step approaches the full Newton step.

use crate::error::Error;
use crate::linalg::{euclid_norm, inf_norm, solve_linear, Matrix, Vector};
use crate::system::NonlinearSystem;

/// Time step below which the solver gives up: repeated rejections halve `dt`,
/// so reaching this floor means no acceptable step exists at this iterate.
const DT_FLOOR: f64 = 1e-300;

/// Named constants of the solver stack.
///
/// The first block configures the continuation Newton iteration, the second
/// block the multi-root enumeration and the evolution stage built on top.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Ratio threshold to accept a trial step. Default: `1e-6`.
    pub eta_a: f64,
    /// `|1 - rho| <= eta1` enlarges the time step. Default: `0.25`.
    pub eta1: f64,
    /// `|1 - rho| >= eta2` shrinks the time step. Default: `0.75`.
    pub eta2: f64,
    /// Time-step enlargement factor. Default: `2`.
    pub gamma1: f64,
    /// Time-step shrink factor. Default: `0.5`.
    pub gamma2: f64,
    /// Initial time step. Default: `2`.
    pub dt0: f64,
    /// Residual tolerance on `||F||_inf`. Default: `1e-6`.
    pub eps: f64,
    /// Maximum number of successful iterations. Default: `400`.
    pub maxit: usize,
    /// Forward-difference step for approximated Jacobians. Default: `1e-6`.
    pub fd_step: f64,
    /// Two stationary points closer than this in the infinity norm count as
    /// the same point. Default: `1e-4`.
    pub dup_tol: f64,
    /// Deflated solves attempted per start before moving on. Default: `100`.
    pub per_start_cap: usize,
    /// Evolution population size `L`. Default: `20`.
    pub population: usize,
    /// Evolution generations `M`. Default: `10`.
    pub generations: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            eta_a: 1e-6,
            eta1: 0.25,
            eta2: 0.75,
            gamma1: 2.0,
            gamma2: 0.5,
            dt0: 2.0,
            eps: 1e-6,
            maxit: 400,
            fd_step: 1e-6,
            dup_tol: 1e-4,
            per_start_cap: 100,
            population: 20,
            generations: 10,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(0.0 < self.eta_a && self.eta_a < self.eta1 && self.eta1 < self.eta2 && self.eta2 < 1.0)
        {
            return Err(Error::InvalidConfig {
                reason: "thresholds must satisfy 0 < eta_a < eta1 < eta2 < 1",
            });
        }
        if self.gamma1 <= 1.0 {
            return Err(Error::InvalidConfig {
                reason: "gamma1 must exceed 1",
            });
        }
        if !(0.0 < self.gamma2 && self.gamma2 < 1.0) {
            return Err(Error::InvalidConfig {
                reason: "gamma2 must lie in (0, 1)",
            });
        }
        if self.dt0 <= 0.0 {
            return Err(Error::InvalidConfig {
                reason: "dt0 must be positive",
            });
        }
        if self.eps <= 0.0 {
            return Err(Error::InvalidConfig {
                reason: "eps must be positive",
            });
        }
        if self.maxit < 1 {
            return Err(Error::InvalidConfig {
                reason: "maxit must be at least 1",
            });
        }
        if self.fd_step <= 0.0 {
            return Err(Error::InvalidConfig {
                reason: "fd_step must be positive",
            });
        }
        Ok(())
    }
}

/// Why the solver stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// `||F||_inf` dropped below the tolerance.
    Converged,
    /// The successful-iteration budget was exhausted.
    MaxIterations,
    /// The (possibly deflated) Jacobian was numerically singular.
    SingularJacobian,
    /// A residual or Jacobian evaluation failed at an accepted iterate.
    EvalFailed,
    /// Repeated rejections shrank the time step to nothing.
    Stalled,
}

/// Outcome of one continuation Newton run.
#[derive(Debug, Clone)]
pub struct CnmtrResult {
    pub x_star: Vector,
    pub residual_inf: f64,
    pub converged: bool,
    pub termination: Termination,
    /// Successful-step counter (loop entries, not trial count).
    pub iterations: usize,
    pub f_evals: usize,
    pub jac_evals: usize,
}

/// Mutable state of the iteration.
///
/// After a rejected trial `x`, `f_val` and `newton_step` keep their previous
/// values; only the time step and the bookkeeping fields change.
#[derive(Debug, Clone)]
pub struct CnmtrState {
    pub x: Vec<f64>,
    pub f_val: Vec<f64>,
    pub jacobian: Matrix,
    pub newton_step: Vec<f64>,
    pub dt: f64,
    pub rho_prev: f64,
    pub s_prev_inf: f64,
    pub itc: usize,
    pub trial_success: bool,
}

impl CnmtrState {
    /// Builds a ready-to-step state at `x`: evaluates the residual and the
    /// Jacobian and solves for the Newton step.
    pub fn at_point(sys: &dyn NonlinearSystem, x: &[f64], dt: f64) -> Result<Self, Error> {
        let f_val = sys.eval(x)?;
        let jacobian = sys.jacobian(x)?;
        let rhs: Vec<f64> = f_val.iter().map(|v| -v).collect();
        let newton_step = solve_linear(&jacobian, &rhs)?.into_vec();
        Ok(Self {
            x: x.to_vec(),
            f_val,
            jacobian,
            newton_step,
            dt,
            rho_prev: 0.0,
            s_prev_inf: 0.0,
            itc: 0,
            trial_success: true,
        })
    }
}

/// Reduction ratio between the actual and the predicted residual decrease:
/// `(||F_k|| - ||F_{k+1}||) / ((dt/(1+dt)) ||F_k||)`.
///
/// The caller overrides the result with `-1` when the trial residual grew.
pub fn compute_rho(f_old_norm: f64, f_new_norm: f64, dt: f64) -> Result<f64, Error> {
    debug_assert!(dt > 0.0);
    if f_old_norm == 0.0 {
        return Err(Error::ZeroResidual);
    }
    Ok((f_old_norm - f_new_norm) / ((dt / (1.0 + dt)) * f_old_norm))
}

/// Trust-region time-step update: enlarge by `gamma1` when the ratio is close
/// to one, keep in the middle band, shrink by `gamma2` otherwise.
pub fn update_dt(dt: f64, rho: f64, config: &SolverConfig) -> f64 {
    let dev = (1.0 - rho).abs();
    if dev <= config.eta1 {
        config.gamma1 * dt
    } else if dev < config.eta2 {
        dt
    } else {
        config.gamma2 * dt
    }
}

/// Jacobian reuse rule: refresh when the last ratio was poor or the last step
/// was long. The first iteration uses `rho = 0`, `s = 0` and hence refreshes.
pub fn should_refresh_jacobian(rho_prev: f64, s_prev_inf: f64) -> bool {
    (1.0 - rho_prev).abs() > 0.25 || s_prev_inf > 1.0
}

/// One trial of the continuation step: computes the trial point
/// `x + (dt/(1+dt)) s`, scores it, updates the time step and either accepts
/// the trial or freezes the state.
///
/// A failed or non-finite trial evaluation is scored `rho = -1` (reject and
/// shrink), which keeps the loop total.
pub fn continuation_step(
    mut state: CnmtrState,
    sys: &dyn NonlinearSystem,
    config: &SolverConfig,
) -> CnmtrState {
    let alpha = state.dt / (1.0 + state.dt);
    let s: Vec<f64> = state.newton_step.iter().map(|v| alpha * v).collect();
    let x_trial: Vec<f64> = state.x.iter().zip(&s).map(|(a, b)| a + b).collect();
    let f_old_norm = euclid_norm(&state.f_val);

    let (rho, trial) = match sys.eval(&x_trial) {
        Ok(f_new) => {
            let f_new_norm = euclid_norm(&f_new);
            if f_old_norm < f_new_norm {
                (-1.0, None)
            } else {
                let rho = compute_rho(f_old_norm, f_new_norm, state.dt)
                    .expect("stepping state has a positive residual norm");
                (rho, Some(f_new))
            }
        }
        Err(_) => (-1.0, None),
    };

    state.dt = update_dt(state.dt, rho, config);
    if rho >= config.eta_a {
        state.x = x_trial;
        state.f_val = trial.expect("accepted trial carries its residual");
        state.trial_success = true;
    } else {
        state.trial_success = false;
    }
    state.rho_prev = rho;
    state.s_prev_inf = inf_norm(&s);
    state
}

/// Runs the continuation Newton iteration from `x0` until `||F||_inf` drops
/// below `config.eps` or the iteration budget runs out.
///
/// The Jacobian is refreshed per [`should_refresh_jacobian`] and the Newton
/// step is recomputed only after a successful trial. A singular Jacobian ends
/// the run as a reported failure; an evaluation error at `x0` is returned as
/// an error because no iterate exists yet.
pub fn solve(
    sys: &dyn NonlinearSystem,
    x0: &[f64],
    config: &SolverConfig,
) -> Result<CnmtrResult, Error> {
    config.validate()?;
    if x0.len() != sys.dim() {
        return Err(Error::Dimension {
            expected: sys.dim(),
            found: x0.len(),
        });
    }
    let f0 = sys.eval(x0)?;
    let n = sys.dim();
    let mut f_evals = 1usize;
    let mut jac_evals = 0usize;

    let mut st = CnmtrState {
        x: x0.to_vec(),
        f_val: f0,
        // Placeholder; the first pass always refreshes since |1 - 0| > 0.25.
        jacobian: Matrix::identity(n),
        newton_step: vec![0.0; n],
        dt: config.dt0,
        rho_prev: 0.0,
        s_prev_inf: 0.0,
        itc: 0,
        trial_success: true,
    };
    // Whether the stored Jacobian was evaluated at the current iterate.
    let mut jac_at_iterate = false;

    let termination = loop {
        if st.itc >= config.maxit {
            break Termination::MaxIterations;
        }
        if st.trial_success {
            st.itc += 1;
            if inf_norm(&st.f_val) < config.eps {
                break Termination::Converged;
            }
            if should_refresh_jacobian(st.rho_prev, st.s_prev_inf) {
                match sys.jacobian(&st.x) {
                    Ok(j) => {
                        st.jacobian = j;
                        jac_evals += 1;
                    }
                    Err(_) => break Termination::EvalFailed,
                }
                jac_at_iterate = true;
            } else {
                jac_at_iterate = false;
            }
            let rhs: Vec<f64> = st.f_val.iter().map(|v| -v).collect();
            match solve_linear(&st.jacobian, &rhs) {
                Ok(s) => st.newton_step = s.into_vec(),
                Err(Error::Singular { .. }) => break Termination::SingularJacobian,
                Err(_) => break Termination::EvalFailed,
            }
        }
        if st.dt < DT_FLOOR {
            break Termination::Stalled;
        }
        st = continuation_step(st, sys, config);
        f_evals += 1;

        // A rejected trial has |1 - rho| > eta1, for which the Jacobian
        // update rule prescribes J(x_{k+1}) with x_{k+1} = x_k: a carried-over
        // Jacobian is re-evaluated once at the frozen iterate. Without this a
        // stale Jacobian can reject every shrinking step and stall the loop.
        if !st.trial_success && !jac_at_iterate {
            match sys.jacobian(&st.x) {
                Ok(j) => {
                    st.jacobian = j;
                    jac_evals += 1;
                }
                Err(_) => break Termination::EvalFailed,
            }
            jac_at_iterate = true;
            let rhs: Vec<f64> = st.f_val.iter().map(|v| -v).collect();
            match solve_linear(&st.jacobian, &rhs) {
                Ok(s) => st.newton_step = s.into_vec(),
                Err(Error::Singular { .. }) => break Termination::SingularJacobian,
                Err(_) => break Termination::EvalFailed,
            }
        }
    };

    let residual_inf = inf_norm(&st.f_val);
    Ok(CnmtrResult {
        x_star: Vector::new(st.x)?,
        residual_inf,
        converged: termination == Termination::Converged,
        termination,
        iterations: st.itc,
        f_evals,
        jac_evals,
    })
}
