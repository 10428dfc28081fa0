//! Inverse kinematics as nonlinear least squares.
//!
//! A [`Cost`] supplies a residual `r(q)` and its Jacobian; its value is
//! `|r|^2 / 2`. [`gauss_newton_solve`] minimizes any cost with damped
//! Gauss-Newton steps and backtracking.

mod motor_cost;
mod primitive_cost;
mod solver;

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::primitives::GeometryError;
use crate::robot::RobotError;
use crate::versors::VersorError;

pub use motor_cost::MotorCost;
pub use primitive_cost::{Primitive, PrimitiveTargetCost};
pub use solver::{gauss_newton_solve, SolveReport, SolverConfig, Termination};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OptimError {
    #[error(transparent)]
    Robot(#[from] RobotError),
    #[error(transparent)]
    Versor(#[from] VersorError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{tool} tool cannot target a {target}")]
    UnsupportedPair { tool: &'static str, target: &'static str },
    #[error("normal equations are singular")]
    LinearSolveFailure,
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(&'static str),
}

pub trait Cost {
    /// Number of decision variables.
    fn dof(&self) -> usize;

    fn residual(&self, q: &[f64]) -> Result<DVector<f64>, OptimError>;

    /// Jacobian of the residual, one column per variable.
    fn jacobian(&self, q: &[f64]) -> Result<DMatrix<f64>, OptimError>;

    fn value(&self, q: &[f64]) -> Result<f64, OptimError> {
        Ok(0.5 * self.residual(q)?.norm_squared())
    }

    /// `J^T r`.
    fn gradient(&self, q: &[f64]) -> Result<DVector<f64>, OptimError> {
        Ok(self.jacobian(q)?.transpose() * self.residual(q)?)
    }

    /// Gauss-Newton approximation `J^T J`.
    fn hessian(&self, q: &[f64]) -> Result<DMatrix<f64>, OptimError> {
        let j = self.jacobian(q)?;
        Ok(j.transpose() * j)
    }
}
