use cga_robotics::model_io;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("models");
    let arm = model_io::load_manipulator_yaml(&std::fs::read_to_string(dir.join("two_link.yaml"))?)?;
    println!("end effector `{}` after joints {:?}", arm.ee_joint(), arm.joint_names());

    // the URDF twin converts to the same robot
    let doc = model_io::convert_urdf(&std::fs::read_to_string(dir.join("two_link.urdf"))?)?;
    let twin = model_io::load_manipulator(&doc, Some("tool_joint"))?;

    for q in [[0.0, 0.0], [0.3, 1.2], [-1.0, 2.0]] {
        let a = arm.forward_kinematics(&q)?.translation();
        let b = twin.forward_kinematics(&q)?.translation();
        println!("q = {q:?}: yaml {a:.4?} urdf {b:.4?}");
    }

    match arm.forward_kinematics(&[0.1]) {
        Err(e) => println!("wrong length: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
