use nalgebra::{DMatrix, DVector, SMatrix};

use super::{Cost, OptimError};
use crate::algebra::Subspace;
use crate::robot::Manipulator;
use crate::versors::{Motor, Versor};

/// Step of the forward differences through the motor logarithm.
const LOG_STEP: f64 = 1e-7;

/// Pose error `log(reverse(M_d) M_ee(q))` between the end effector and a
/// target motor.
#[derive(Debug, Clone)]
pub struct MotorCost<'a> {
    manipulator: &'a Manipulator,
    target: Motor,
    target_rev: Motor,
}

impl<'a> MotorCost<'a> {
    pub fn new(manipulator: &'a Manipulator, target: Motor) -> Self {
        MotorCost { manipulator, target, target_rev: target.reverse() }
    }

    pub fn target(&self) -> &Motor {
        &self.target
    }

    fn relative(&self, q: &[f64]) -> Result<Motor, OptimError> {
        Ok(self.target_rev * self.manipulator.forward_kinematics(q)?)
    }

    fn log6(m: &Motor) -> Result<[f64; 6], OptimError> {
        Ok(m.canonical().log()?.to_array())
    }
}

impl Cost for MotorCost<'_> {
    fn dof(&self) -> usize {
        self.manipulator.dof()
    }

    fn residual(&self, q: &[f64]) -> Result<DVector<f64>, OptimError> {
        Ok(DVector::from_row_slice(&Self::log6(&self.relative(q)?)?))
    }

    fn jacobian(&self, q: &[f64]) -> Result<DMatrix<f64>, OptimError> {
        let raw = self.relative(q)?;
        let flip = if raw.coeffs()[0] < 0.0 { -1.0 } else { 1.0 };
        let rel = raw.canonical();
        let base = Self::log6(&rel)?;
        let mut dlog = SMatrix::<f64, 6, 8>::zeros();
        for k in 0..8 {
            let mut c = rel.coeffs().to_vec();
            c[k] += LOG_STEP;
            let bumped = Motor::from_coeffs(&c).log()?.to_array();
            for r in 0..6 {
                dlog[(r, k)] = (bumped[r] - base[r]) / LOG_STEP;
            }
        }
        let cols = self.manipulator.analytic_jacobian(q)?;
        let mut dm = DMatrix::zeros(8, cols.len());
        for (i, col) in cols.iter().enumerate() {
            let d = self.target_rev * *col;
            for k in 0..8 {
                dm[(k, i)] = flip * d.coeffs()[k];
            }
        }
        Ok(DMatrix::from_iterator(6, 8, dlog.iter().copied()) * dm)
    }
}
