use cga_robotics::models;
use cga_robotics::optim::{gauss_newton_solve, Cost, MotorCost, SolverConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arm = models::franka_emika();
    let home = [0.0, -0.785, 0.0, -2.356, 0.0, 1.571, 0.785];
    let goal = [0.4, -0.3, 0.2, -1.8, 0.1, 1.9, 0.2];
    let target = arm.forward_kinematics(&goal)?;

    let cost = MotorCost::new(&arm, target);
    println!("initial cost {:.3e}", cost.value(&home)?);
    let report = gauss_newton_solve(&cost, &home, &SolverConfig::default())?;
    println!(
        "{:?} after {} iterations, residual {:.2e}",
        report.termination,
        report.iterations,
        report.residual_norm()
    );
    for (k, r) in report.residual_history.iter().enumerate() {
        println!("  {k:>2} {r:.3e}");
    }
    let reached = arm.forward_kinematics(&report.q)?;
    println!("target   {:.6?}", target.translation());
    println!("reached  {:.6?}", reached.translation());
    Ok(())
}
