use cga_robotics::robot::{Joint, JointLimits, Link, SystemBuilder};
use cga_robotics::versors::Motor;
use nalgebra::Matrix3;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut builder = SystemBuilder::new();
    builder
        .add_link(Link::massless("base"))
        .add_link(Link::new("upper", 1.5, [0.25, 0.0, 0.0], Matrix3::from_diagonal_element(0.03)))
        .add_link(Link::point_mass("lower", 1.0, [0.2, 0.0, 0.0]))
        .add_joint(
            Joint::revolute("shoulder", "base", "upper", Motor::from_xyz_rpy([0.0, 0.0, 0.1], [0.0; 3]), [0.0, 0.0, 1.0])
                .with_limits(JointLimits { lower: -3.0, upper: 3.0, velocity: 2.0, effort: 20.0 }),
        )
        .add_joint(Joint::prismatic("slide", "upper", "lower", Motor::from_xyz_rpy([0.5, 0.0, 0.0], [0.0; 3]), [1.0, 0.0, 0.0]))
        .add_kinematic_chain("arm", &["shoulder", "slide"]);
    let system = builder.finalize()?;

    println!("base link: {}", system.base_link().name);
    for j in system.joints() {
        println!("joint {:<9} {:?} {} -> {}", j.name, j.kind, j.parent, j.child);
    }
    let chain = system.chain("arm").expect("declared above");
    println!("chain `arm` has {} degrees of freedom", chain.dof());

    // validation happens in finalize
    let mut broken = SystemBuilder::new();
    broken
        .add_link(Link::massless("base"))
        .add_joint(Joint::fixed("dangling", "base", "nowhere", Motor::identity()));
    println!("broken system: {}", broken.finalize().unwrap_err());
    Ok(())
}
