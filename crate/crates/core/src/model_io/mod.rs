//! YAML robot descriptions and URDF conversion.
//!
//! The document schema (`format: 1`):
//!
//! ```yaml
//! format: 1
//! name: arm
//! links:
//!   - {name: base, mass: 0.0, com: [0, 0, 0], inertia: [0, 0, 0, 0, 0, 0]}
//!   - {name: l1, mass: 1.0, com: [0.5, 0, 0], inertia: [0.1, 0.1, 0.1, 0, 0, 0]}
//! joints:
//!   - name: j1
//!     kind: revolute
//!     parent: base
//!     child: l1
//!     origin: {xyz: [0, 0, 0.1], rpy: [0, 0, 0]}
//!     axis: [0, 0, 1]
//!     limits: {lower: -3.0, upper: 3.0, velocity: 2.0, effort: 50.0}
//! chains:
//!   - {name: arm, joints: [j1]}
//! end_effector_joint: j1
//! ```
//!
//! Inertia is `[xx, yy, zz, xy, xz, yz]` about the center of mass in the link
//! frame. Origins use URDF conventions: translate by `xyz`, then rotate by
//! `Rz(yaw) Ry(pitch) Rx(roll)`.

mod urdf;

use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::robot::{Joint, JointKind, JointLimits, Link, Manipulator, RobotError, System, SystemBuilder};
use crate::versors::Motor;

pub use urdf::{convert_urdf, convert_urdf_with_warnings};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("`{entity}` references unknown `{reference}`")]
    DanglingReference { entity: String, reference: String },
    #[error("no joint named `{0}`")]
    NoSuchJoint(String),
    #[error("`{0}` is not reachable from the base along a serial path")]
    NonSerialChain(String),
    #[error("joint `{joint}` has unsupported type `{kind}`")]
    UnsupportedJointType { joint: String, kind: String },
    #[error("malformed URDF: {0}")]
    MalformedUrdf(String),
    #[error("invalid model: {0}")]
    Invalid(RobotError),
}

impl From<RobotError> for ModelError {
    fn from(e: RobotError) -> Self {
        match e {
            RobotError::DanglingReference { entity, reference } => {
                ModelError::DanglingReference { entity, reference }
            }
            RobotError::NoSuchJoint(j) => ModelError::NoSuchJoint(j),
            RobotError::NonSerialChain(c) => ModelError::NonSerialChain(c),
            other => ModelError::Invalid(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkDoc {
    pub name: String,
    #[serde(default)]
    pub mass: f64,
    #[serde(default)]
    pub com: [f64; 3],
    #[serde(default)]
    pub inertia: [f64; 6],
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Origin {
    #[serde(default)]
    pub xyz: [f64; 3],
    #[serde(default)]
    pub rpy: [f64; 3],
}

impl Origin {
    pub fn motor(&self) -> Motor {
        Motor::from_xyz_rpy(self.xyz, self.rpy)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JointDoc {
    pub name: String,
    pub kind: JointKind,
    pub parent: String,
    pub child: String,
    #[serde(default)]
    pub origin: Origin,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limits: Option<JointLimits>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDoc {
    pub name: String,
    pub joints: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub format: u32,
    pub name: String,
    pub links: Vec<LinkDoc>,
    pub joints: Vec<JointDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chains: Vec<ChainDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end_effector_joint: Option<String>,
}

fn inertia_matrix(i: [f64; 6]) -> Matrix3<f64> {
    let [xx, yy, zz, xy, xz, yz] = i;
    Matrix3::new(xx, xy, xz, xy, yy, yz, xz, yz, zz)
}

impl ModelDocument {
    pub fn from_yaml(text: &str) -> Result<Self, ModelError> {
        let doc: ModelDocument = serde_yaml::from_str(text).map_err(|e| ModelError::Schema(e.to_string()))?;
        if doc.format != FORMAT_VERSION {
            return Err(ModelError::Schema(format!(
                "unsupported format {} (expected {FORMAT_VERSION})",
                doc.format
            )));
        }
        Ok(doc)
    }

    pub fn to_yaml(&self) -> String {
        serde_yaml::to_string(self).expect("document serializes")
    }

    /// Tip joint when the joints form a single path, otherwise `None`.
    fn sole_tip(&self) -> Option<&str> {
        let mut tips = self
            .joints
            .iter()
            .filter(|j| !self.joints.iter().any(|k| k.parent == j.child));
        let tip = tips.next()?;
        tips.next().is_none().then_some(tip.name.as_str())
    }
}

/// Parses a YAML document.
pub fn parse(text: &str) -> Result<ModelDocument, ModelError> {
    ModelDocument::from_yaml(text)
}

/// Serializes a document to YAML.
pub fn emit(doc: &ModelDocument) -> String {
    doc.to_yaml()
}

pub fn load_system(doc: &ModelDocument) -> Result<System, ModelError> {
    let mut b = SystemBuilder::new();
    for l in &doc.links {
        b.add_link(Link::new(l.name.clone(), l.mass, l.com, inertia_matrix(l.inertia)));
    }
    for j in &doc.joints {
        let axis = match (j.kind, j.axis) {
            (JointKind::Fixed, a) => a.unwrap_or([0.0, 0.0, 1.0]),
            (_, Some(a)) => a,
            (_, None) => return Err(ModelError::Schema(format!("joint `{}` needs an axis", j.name))),
        };
        let mut joint = Joint::new(j.name.clone(), j.kind, j.parent.clone(), j.child.clone(), j.origin.motor(), axis);
        joint.limits = j.limits;
        b.add_joint(joint);
    }
    for c in &doc.chains {
        b.add_kinematic_chain(c.name.clone(), &c.joints);
    }
    Ok(b.finalize()?)
}

/// Loads the system and builds the manipulator ending at `ee_joint`, falling
/// back to the document's end-effector joint and then to the tip of a
/// single-path model.
pub fn load_manipulator(doc: &ModelDocument, ee_joint: Option<&str>) -> Result<Manipulator, ModelError> {
    let system = load_system(doc)?;
    let ee = ee_joint
        .or(doc.end_effector_joint.as_deref())
        .or_else(|| doc.sole_tip())
        .ok_or_else(|| ModelError::NoSuchJoint("<end effector not specified>".into()))?;
    Ok(Manipulator::new(system, ee)?)
}

pub fn load_manipulator_yaml(text: &str) -> Result<Manipulator, ModelError> {
    load_manipulator(&parse(text)?, None)
}
