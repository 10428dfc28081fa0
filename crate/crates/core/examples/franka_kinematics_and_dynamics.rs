use cga_robotics::models;
use cga_robotics::robot::GRAVITY;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arm = models::franka_emika();
    let q = [0.0, -0.785, 0.0, -2.356, 0.0, 1.571, 0.785];
    let qd = [0.1, -0.2, 0.1, 0.3, -0.1, 0.2, 0.0];
    let qdd = [0.5, 0.0, -0.5, 0.2, 0.0, 0.1, 0.3];

    let pose = arm.forward_kinematics(&q)?;
    println!("flange pose{:.4}", pose.to_homogeneous());

    let jac = arm.geometric_jacobian(&q)?;
    println!("geometric jacobian (world twists per joint)");
    for (name, col) in arm.joint_names().iter().zip(&jac) {
        println!("  {name:<12} {:+.4?}", col.to_array());
    }
    println!("analytic jacobian has {} motor-valued columns", arm.analytic_jacobian(&q)?.len());

    let tau = arm.inverse_dynamics(&q, &qd, &qdd)?;
    println!("tau (gravity {GRAVITY:?}) {tau:+.4?}");
    let back = arm.forward_dynamics(&q, &qd, &tau)?;
    println!("qdd recovered by forward dynamics {back:+.4?}");

    let mm = arm.mass_matrix(&q)?;
    println!("mass matrix eigenvalues {:.4?}", mm.symmetric_eigenvalues().as_slice());
    Ok(())
}
