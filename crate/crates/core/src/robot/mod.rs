//! Joint-link systems, serial manipulators, kinematics and dynamics.
//!
//! A [`System`] is assembled with a [`SystemBuilder`] and validated once in
//! [`SystemBuilder::finalize`]. A [`Manipulator`] selects the chain from the
//! base link to an end-effector joint and exposes forward kinematics,
//! Jacobians and the recursive dynamics algorithms. Twists and wrenches are
//! bivectors ([`MotorGenerator`](crate::versors::MotorGenerator) and
//! [`Wrench`](crate::versors::Wrench)); frames are motors.

mod dynamics;
mod joint;
mod manipulator;
mod system;

use thiserror::Error;

pub use dynamics::SpatialInertia;
pub use joint::{Joint, JointKind, JointLimits, Link};
pub use manipulator::Manipulator;
pub use system::{KinematicChain, System, SystemBuilder};

/// Standard gravity along `-z`, in m/s^2.
pub const GRAVITY: [f64; 3] = [0.0, 0.0, -9.81];

/// Smallest articulated inertia pivot accepted by forward dynamics.
pub const EPS_PIVOT: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RobotError {
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("`{entity}` references unknown `{reference}`")]
    DanglingReference { entity: String, reference: String },
    #[error("link `{0}` is part of a cycle or has more than one parent joint")]
    CycleDetected(String),
    #[error("system has several root links: {0:?}")]
    MultipleRoots(Vec<String>),
    #[error("system has no links")]
    Empty,
    #[error("no joint named `{0}`")]
    NoSuchJoint(String),
    #[error("no chain named `{0}`")]
    NoSuchChain(String),
    #[error("chain `{0}` is not a connected base-to-tip path")]
    NonSerialChain(String),
    #[error("chain `{0}` has no actuated joints")]
    NoActuatedJoints(String),
    #[error("joint `{0}` has a zero axis")]
    InvalidAxis(String),
    #[error("joint `{0}` has lower limit above upper limit")]
    InvalidLimits(String),
    #[error("link `{0}` has negative mass or indefinite inertia")]
    InvalidLink(String),
    #[error("expected {expected} joint values, got {found}")]
    DofMismatch { expected: usize, found: usize },
    #[error("joint `{joint}` value {value} outside [{lower}, {upper}]")]
    JointLimitViolation { joint: String, value: f64, lower: f64, upper: f64 },
    #[error("articulated inertia is singular at joint `{joint}` (pivot {pivot:e})")]
    SingularInertia { joint: String, pivot: f64 },
}
