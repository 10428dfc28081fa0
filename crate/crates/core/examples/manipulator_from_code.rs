use cga_robotics::robot::{Joint, Link, Manipulator, SystemBuilder};
use cga_robotics::versors::Motor;

/// Planar arm with unit links and unit point masses at the link tips.
fn planar_arm() -> Result<Manipulator, Box<dyn std::error::Error>> {
    let step = Motor::from_xyz_rpy([1.0, 0.0, 0.0], [0.0; 3]);
    let mut b = SystemBuilder::new();
    b.add_link(Link::massless("base"))
        .add_link(Link::point_mass("l1", 1.0, [1.0, 0.0, 0.0]))
        .add_link(Link::point_mass("l2", 1.0, [1.0, 0.0, 0.0]))
        .add_link(Link::massless("tool"))
        .add_joint(Joint::revolute("j1", "base", "l1", Motor::identity(), [0.0, 0.0, 1.0]))
        .add_joint(Joint::revolute("j2", "l1", "l2", step, [0.0, 0.0, 1.0]))
        .add_joint(Joint::fixed("ee", "l2", "tool", step));
    Ok(Manipulator::new(b.finalize()?, "ee")?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arm = planar_arm()?;
    let q = [0.5, -1.0];
    println!("joints {:?}, dof {}", arm.joint_names(), arm.dof());

    let pose = arm.forward_kinematics(&q)?;
    println!("tool at {:?}", pose.translation());
    println!("expected {:?}", [q[0].cos() + (q[0] + q[1]).cos(), q[0].sin() + (q[0] + q[1]).sin(), 0.0]);

    for (i, col) in arm.geometric_jacobian(&q)?.iter().enumerate() {
        println!("J[{i}] w = {:?} u = {:?}", col.rotation(), col.translation());
    }
    println!("mass matrix{:.4}", arm.mass_matrix(&q)?);
    Ok(())
}
