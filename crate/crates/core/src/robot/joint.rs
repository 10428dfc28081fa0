use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};

use super::RobotError;
use crate::versors::{Motor, MotorGenerator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JointKind {
    Fixed,
    Revolute,
    Prismatic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JointLimits {
    pub lower: f64,
    pub upper: f64,
    pub velocity: f64,
    pub effort: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Joint {
    pub name: String,
    pub kind: JointKind,
    pub parent: String,
    pub child: String,
    /// Transform from the parent link frame to the joint frame.
    pub frame: Motor,
    /// Unit axis in the joint frame; unused for fixed joints.
    pub axis: [f64; 3],
    pub limits: Option<JointLimits>,
}

impl Joint {
    pub fn new(
        name: impl Into<String>,
        kind: JointKind,
        parent: impl Into<String>,
        child: impl Into<String>,
        frame: Motor,
        axis: [f64; 3],
    ) -> Self {
        Joint {
            name: name.into(),
            kind,
            parent: parent.into(),
            child: child.into(),
            frame,
            axis,
            limits: None,
        }
    }

    pub fn fixed(
        name: impl Into<String>,
        parent: impl Into<String>,
        child: impl Into<String>,
        frame: Motor,
    ) -> Self {
        Self::new(name, JointKind::Fixed, parent, child, frame, [0.0, 0.0, 1.0])
    }

    pub fn revolute(
        name: impl Into<String>,
        parent: impl Into<String>,
        child: impl Into<String>,
        frame: Motor,
        axis: [f64; 3],
    ) -> Self {
        Self::new(name, JointKind::Revolute, parent, child, frame, axis)
    }

    pub fn prismatic(
        name: impl Into<String>,
        parent: impl Into<String>,
        child: impl Into<String>,
        frame: Motor,
        axis: [f64; 3],
    ) -> Self {
        Self::new(name, JointKind::Prismatic, parent, child, frame, axis)
    }

    pub fn with_limits(mut self, limits: JointLimits) -> Self {
        self.limits = Some(limits);
        self
    }

    pub fn is_actuated(&self) -> bool {
        self.kind != JointKind::Fixed
    }

    /// Unit twist of the joint in its own frame.
    pub fn twist(&self) -> MotorGenerator {
        match self.kind {
            JointKind::Fixed => MotorGenerator::zero(),
            JointKind::Revolute => MotorGenerator::new(self.axis, [0.0; 3]),
            JointKind::Prismatic => MotorGenerator::new([0.0; 3], self.axis),
        }
    }

    /// `frame * exp(q B)`; fixed joints ignore `q`.
    pub fn motor(&self, q: f64) -> Motor {
        match self.kind {
            JointKind::Fixed => self.frame,
            _ => {
                let g = self.twist().to_array().map(|c| c * q);
                self.frame * Motor::exp(&MotorGenerator::from_array(g))
            }
        }
    }

    /// Like [`Joint::motor`] but rejects values outside the joint limits.
    pub fn motor_checked(&self, q: f64) -> Result<Motor, RobotError> {
        self.check_limits(q)?;
        Ok(self.motor(q))
    }

    pub fn check_limits(&self, q: f64) -> Result<(), RobotError> {
        match self.limits {
            Some(l) if self.is_actuated() && (q < l.lower || q > l.upper) => {
                Err(RobotError::JointLimitViolation {
                    joint: self.name.clone(),
                    value: q,
                    lower: l.lower,
                    upper: l.upper,
                })
            }
            _ => Ok(()),
        }
    }

    pub(crate) fn validate(&mut self) -> Result<(), RobotError> {
        if self.is_actuated() {
            let n = crate::primitives::norm3(self.axis);
            if n < 1e-12 {
                return Err(RobotError::InvalidAxis(self.name.clone()));
            }
            self.axis = self.axis.map(|c| c / n);
        }
        if let Some(l) = self.limits {
            if l.lower > l.upper {
                return Err(RobotError::InvalidLimits(self.name.clone()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Link {
    pub name: String,
    /// Mass in kg.
    pub mass: f64,
    /// Center of mass in the link frame.
    pub center_of_mass: [f64; 3],
    /// Rotational inertia about the center of mass, in the link frame.
    pub inertia: Matrix3<f64>,
}

impl Link {
    pub fn new(name: impl Into<String>, mass: f64, center_of_mass: [f64; 3], inertia: Matrix3<f64>) -> Self {
        Link { name: name.into(), mass, center_of_mass, inertia }
    }

    pub fn massless(name: impl Into<String>) -> Self {
        Self::new(name, 0.0, [0.0; 3], Matrix3::zeros())
    }

    pub fn point_mass(name: impl Into<String>, mass: f64, center_of_mass: [f64; 3]) -> Self {
        Self::new(name, mass, center_of_mass, Matrix3::zeros())
    }

    pub(crate) fn validate(&self) -> Result<(), RobotError> {
        let bad = || RobotError::InvalidLink(self.name.clone());
        if self.mass < 0.0 || !self.mass.is_finite() {
            return Err(bad());
        }
        let sym = (self.inertia - self.inertia.transpose()).abs().max();
        let scale = self.inertia.abs().max().max(1.0);
        if sym > 1e-9 * scale {
            return Err(bad());
        }
        let eig = self.inertia.symmetric_eigenvalues();
        if eig.iter().any(|e| *e < -1e-9 * scale) {
            return Err(bad());
        }
        Ok(())
    }
}
