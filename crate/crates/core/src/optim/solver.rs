use nalgebra::DMatrix;
#[cfg(test)]
use nalgebra::DVector;

use super::{Cost, OptimError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub max_iterations: usize,
    /// Fixed Tikhonov damping added to `J^T J`.
    pub damping: f64,
    /// Stop when the accepted step is shorter than this.
    pub step_tolerance: f64,
    /// Stop when an accepted step lowers the cost by less than this.
    pub cost_tolerance: f64,
    /// Factor applied to the step on each backtracking attempt.
    pub shrink: f64,
    pub max_halvings: usize,
    /// Upper bound on the norm of a step, applied before the line search.
    /// Keeps iterates from jumping across singular configurations.
    pub max_step: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_iterations: 100,
            damping: 1e-6,
            step_tolerance: 1e-10,
            cost_tolerance: 1e-12,
            shrink: 0.5,
            max_halvings: 20,
            max_step: 0.3,
        }
    }
}

impl SolverConfig {
    fn validate(&self) -> Result<(), OptimError> {
        if self.damping.is_nan() || self.damping < 0.0 {
            return Err(OptimError::InvalidConfig("damping must be non-negative"));
        }
        if !(self.shrink > 0.0 && self.shrink < 1.0) {
            return Err(OptimError::InvalidConfig("shrink must lie in (0, 1)"));
        }
        if !(self.step_tolerance > 0.0 && self.cost_tolerance > 0.0 && self.max_step > 0.0) {
            return Err(OptimError::InvalidConfig("tolerances must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    CostTolerance,
    StepTolerance,
    /// No step length decreased the cost.
    LineSearchFailed,
    MaxIterations,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub q: Vec<f64>,
    pub converged: bool,
    pub termination: Termination,
    pub iterations: usize,
    pub final_cost: f64,
    /// Residual norm at the start and after every accepted step.
    pub residual_history: Vec<f64>,
}

impl SolveReport {
    pub fn residual_norm(&self) -> f64 {
        *self.residual_history.last().expect("history starts with the initial residual")
    }
}

/// Damped Gauss-Newton with backtracking:
/// `dq = -(J^T J + lambda I)^-1 J^T r`, halving the step until the cost
/// decreases.
pub fn gauss_newton_solve<C: Cost + ?Sized>(
    cost: &C,
    q0: &[f64],
    config: &SolverConfig,
) -> Result<SolveReport, OptimError> {
    config.validate()?;
    let n = cost.dof();
    if q0.len() != n {
        return Err(crate::robot::RobotError::DofMismatch { expected: n, found: q0.len() }.into());
    }
    let mut q = q0.to_vec();
    let mut r = cost.residual(&q)?;
    let mut value = 0.5 * r.norm_squared();
    let mut history = vec![r.norm()];
    let mut iterations = 0;
    let termination = loop {
        if value == 0.0 {
            break Termination::CostTolerance;
        }
        if iterations == config.max_iterations {
            break Termination::MaxIterations;
        }
        iterations += 1;
        let j = cost.jacobian(&q)?;
        let jt = j.transpose();
        let a = &jt * &j + DMatrix::identity(n, n) * config.damping;
        let g = &jt * &r;
        let mut dq = a.cholesky().ok_or(OptimError::LinearSolveFailure)?.solve(&(-&g));
        if dq.iter().any(|v| !v.is_finite()) {
            return Err(OptimError::LinearSolveFailure);
        }
        let len = dq.norm();
        if len > config.max_step {
            dq *= config.max_step / len;
        }

        let mut step = 1.0;
        let mut accepted = None;
        for _ in 0..=config.max_halvings {
            let trial: Vec<f64> = q.iter().zip(dq.iter()).map(|(a, b)| a + step * b).collect();
            let rt = cost.residual(&trial)?;
            let vt = 0.5 * rt.norm_squared();
            if vt < value {
                accepted = Some((trial, rt, vt));
                break;
            }
            step *= config.shrink;
        }
        let Some((trial, rt, vt)) = accepted else {
            // no decrease left to find: at the noise floor this is convergence
            break if value <= config.cost_tolerance {
                Termination::CostTolerance
            } else {
                Termination::LineSearchFailed
            };
        };
        let decrease = value - vt;
        let step_norm = step * dq.norm();
        q = trial;
        r = rt;
        value = vt;
        history.push(r.norm());
        if decrease <= config.cost_tolerance {
            break Termination::CostTolerance;
        }
        if step_norm < config.step_tolerance {
            break Termination::StepTolerance;
        }
    };
    let converged = matches!(termination, Termination::CostTolerance | Termination::StepTolerance);
    Ok(SolveReport { q, converged, termination, iterations, final_cost: value, residual_history: history })
}

/// Residual of a plain vector function, used in tests of the solver itself.
#[cfg(test)]
pub(crate) struct FnCost<F: Fn(&[f64]) -> DVector<f64>> {
    pub n: usize,
    pub f: F,
}

#[cfg(test)]
impl<F: Fn(&[f64]) -> DVector<f64>> Cost for FnCost<F> {
    fn dof(&self) -> usize {
        self.n
    }

    fn residual(&self, q: &[f64]) -> Result<DVector<f64>, OptimError> {
        Ok((self.f)(q))
    }

    fn jacobian(&self, q: &[f64]) -> Result<DMatrix<f64>, OptimError> {
        let r0 = (self.f)(q);
        let h = 1e-7;
        Ok(DMatrix::from_fn(r0.len(), self.n, |i, j| {
            let mut qp = q.to_vec();
            qp[j] += h;
            ((self.f)(&qp)[i] - r0[i]) / h
        }))
    }
}
