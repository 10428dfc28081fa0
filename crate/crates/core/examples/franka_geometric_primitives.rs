use cga_robotics::models;
use cga_robotics::primitives::{Circle, DualSphere, Line, Point};
use cga_robotics::versors::Versor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arm = models::franka_emika();
    let q = [0.3, -0.5, 0.0, -2.0, 0.0, 1.6, 0.8];
    let flange = arm.forward_kinematics(&q)?;

    // geometry expressed in the flange frame
    let tcp = Point::new(0.0, 0.0, 0.1);
    let approach = Line::from_point_direction([0.0; 3], [0.0, 0.0, 1.0])?;
    let gripper = DualSphere::new([0.0, 0.0, 0.05], 0.06)?;
    let rim = Circle::from_points(&Point::new(0.04, 0.0, 0.0), &Point::new(0.0, 0.04, 0.0), &Point::new(-0.04, 0.0, 0.0))?;

    println!("tool center point {:.4?}", flange.apply(&tcp).to_euclidean()?);
    let (foot, dir) = flange.apply(&approach).decode()?;
    println!("approach axis through {foot:.4?} along {dir:.4?}");
    let (c, r) = flange.apply(&gripper).decode()?;
    println!("gripper bounding sphere at {c:.4?}, r = {r}");
    let (c, r, n) = flange.apply(&rim).decode()?;
    println!("flange rim center {c:.4?}, r = {r:.3}, normal {n:.4?}");
    Ok(())
}
