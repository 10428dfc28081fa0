//! Robot models shipped with the crate.

use crate::model_io::{self, ModelDocument};
use crate::robot::Manipulator;

pub const FRANKA_EMIKA_YAML: &str = include_str!("../models/franka_emika.yaml");
pub const UR5_YAML: &str = include_str!("../models/ur5.yaml");

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 2] = ["franka_emika", "ur5"];

/// Document of a shipped model by name.
pub fn builtin_document(name: &str) -> Option<ModelDocument> {
    let text = match name {
        "franka_emika" | "franka" | "panda" => FRANKA_EMIKA_YAML,
        "ur5" => UR5_YAML,
        _ => return None,
    };
    Some(model_io::parse(text).expect("shipped model parses"))
}

pub fn builtin(name: &str) -> Option<Manipulator> {
    builtin_document(name).map(|d| model_io::load_manipulator(&d, None).expect("shipped model loads"))
}

/// 7-dof arm with Franka Emika Panda kinematics and published inertial
/// estimates; the end effector is the flange.
pub fn franka_emika() -> Manipulator {
    builtin("franka_emika").expect("known model")
}

/// 6-dof arm with UR5 kinematics.
pub fn ur5() -> Manipulator {
    builtin("ur5").expect("known model")
}
