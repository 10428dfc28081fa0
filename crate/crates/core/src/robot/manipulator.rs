use super::{KinematicChain, RobotError, SpatialInertia, System};
use crate::algebra::{product_into, Product, Subspace};
use crate::versors::{Motor, MotorGenerator, Versor};

/// A system together with the serial chain ending at its end-effector joint.
#[derive(Debug, Clone)]
pub struct Manipulator {
    system: System,
    chain: KinematicChain,
    ee_joint: String,
    /// For each actuated joint, the chain positions whose child links move
    /// rigidly with it, with those links' inertias.
    bodies: Vec<Vec<(usize, SpatialInertia)>>,
}

impl Manipulator {
    pub fn new(system: System, ee_joint: &str) -> Result<Self, RobotError> {
        let chain = system.chain_to_joint(ee_joint)?;
        let act = chain.actuated();
        let bodies = (0..act.len())
            .map(|i| {
                let end = act.get(i + 1).copied().unwrap_or(chain.joints().len());
                (act[i]..end)
                    .map(|p| {
                        let joint = &system.joints()[chain.joints()[p]];
                        let link = &system.links()[system.link_id(&joint.child)];
                        (p, SpatialInertia::from(link))
                    })
                    .collect()
            })
            .collect();
        Ok(Manipulator { system, chain, ee_joint: ee_joint.to_owned(), bodies })
    }

    /// The same manipulator placed at `motor` in the world.
    pub fn with_base_motor(mut self, motor: Motor) -> Self {
        self.system = self.system.with_base_motor(motor);
        self
    }

    pub fn system(&self) -> &System {
        &self.system
    }

    pub fn chain(&self) -> &KinematicChain {
        &self.chain
    }

    pub fn ee_joint(&self) -> &str {
        &self.ee_joint
    }

    pub fn dof(&self) -> usize {
        self.chain.dof()
    }

    pub(crate) fn bodies(&self) -> &[Vec<(usize, SpatialInertia)>] {
        &self.bodies
    }

    /// Names of the actuated joints, in state-vector order.
    pub fn joint_names(&self) -> Vec<&str> {
        self.actuated_joints().map(|j| j.name.as_str()).collect()
    }

    pub(crate) fn actuated_joints(&self) -> impl Iterator<Item = &super::Joint> {
        self.chain
            .actuated()
            .iter()
            .map(|&p| &self.system.joints()[self.chain.joints()[p]])
    }

    pub(crate) fn check_len(&self, v: &[f64]) -> Result<(), RobotError> {
        if v.len() != self.dof() {
            return Err(RobotError::DofMismatch { expected: self.dof(), found: v.len() });
        }
        Ok(())
    }

    /// Rejects configurations outside any joint limit.
    pub fn check_limits(&self, q: &[f64]) -> Result<(), RobotError> {
        self.check_len(q)?;
        for (j, &qi) in self.actuated_joints().zip(q) {
            j.check_limits(qi)?;
        }
        Ok(())
    }

    /// World pose of the frame after each chain joint.
    pub(crate) fn frames(&self, q: &[f64]) -> Result<Vec<Motor>, RobotError> {
        self.check_len(q)?;
        let joints = self.system.joints();
        let mut qi = q.iter();
        let mut m = self.system.base_motor();
        let mut out = Vec::with_capacity(self.chain.joints().len());
        for &j in self.chain.joints() {
            let joint = &joints[j];
            let value = if joint.is_actuated() { *qi.next().expect("length checked") } else { 0.0 };
            m = m * joint.motor(value);
            out.push(m);
        }
        Ok(out)
    }

    /// End-effector motor.
    pub fn forward_kinematics(&self, q: &[f64]) -> Result<Motor, RobotError> {
        Ok(*self.frames(q)?.last().expect("chain is non-empty"))
    }

    pub(crate) fn world_twists(&self, frames: &[Motor]) -> Vec<MotorGenerator> {
        let joints = self.system.joints();
        self.chain
            .actuated()
            .iter()
            .map(|&p| frames[p].apply(&joints[self.chain.joints()[p]].twist()))
            .collect()
    }

    /// Joint twists in the world frame: column `i` is `M_1..i B_i reverse(M_1..i)`.
    pub fn geometric_jacobian(&self, q: &[f64]) -> Result<Vec<MotorGenerator>, RobotError> {
        Ok(self.world_twists(&self.frames(q)?))
    }

    /// Derivatives of the end-effector motor coefficients,
    /// `dM/dq_i = -J_i M / 2`.
    pub fn analytic_jacobian(&self, q: &[f64]) -> Result<Vec<Motor>, RobotError> {
        let frames = self.frames(q)?;
        let ee = *frames.last().expect("chain is non-empty");
        Ok(self
            .world_twists(&frames)
            .iter()
            .map(|j| product_into::<_, _, Motor>(Product::Geometric, &j.scale(-0.5), &ee))
            .collect())
    }

    /// Geometric Jacobian expressed in the end-effector frame.
    pub fn frame_jacobian(&self, q: &[f64]) -> Result<Vec<MotorGenerator>, RobotError> {
        let frames = self.frames(q)?;
        let inv = frames.last().expect("chain is non-empty").reverse();
        Ok(self.world_twists(&frames).iter().map(|j| inv.apply(j)).collect())
    }
}
