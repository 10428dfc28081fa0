use cga_robotics::models;
use cga_robotics::optim::{gauss_newton_solve, Primitive, PrimitiveTargetCost, SolverConfig};
use cga_robotics::primitives::{Circle, DualPlane, DualSphere, Line, Point};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arm = models::franka_emika();
    let home = [0.0, -0.785, 0.0, -2.356, 0.0, 1.571, 0.785];
    let tool_point = Primitive::Point(Point::origin());
    let tool_axis = Primitive::Line(Line::from_point_direction([0.0; 3], [0.0, 0.0, 1.0])?);
    let pt = Point::new;

    let tasks = [
        ("reach a point", tool_point, Primitive::Point(pt(0.5, 0.1, 0.4))),
        ("touch a table at z = 0.2", tool_point, Primitive::Plane(DualPlane::new([0.0, 0.0, 1.0], 0.2)?.dual())),
        ("stay on a sphere", tool_point, Primitive::Sphere(DualSphere::new([0.4, 0.0, 0.5], 0.15)?.dual())),
        ("follow a rail", tool_point, Primitive::Line(Line::from_point_direction([0.4, 0.0, 0.3], [0.0, 1.0, 0.0])?)),
        (
            "trace a circle",
            tool_point,
            Primitive::Circle(Circle::from_points(&pt(0.5, 0.0, 0.4), &pt(0.4, 0.1, 0.4), &pt(0.3, 0.0, 0.4))?),
        ),
        ("point the axis at a spot", tool_axis, Primitive::Point(pt(0.45, 0.0, 0.1))),
        ("align the axis with a line", tool_axis, Primitive::Line(Line::from_point_direction([0.5, 0.0, 0.0], [0.0, 0.0, -1.0])?)),
    ];

    for (name, tool, target) in tasks {
        let cost = PrimitiveTargetCost::new(&arm, tool, target)?;
        let report = gauss_newton_solve(&cost, &home, &SolverConfig::default())?;
        let x = arm.forward_kinematics(&report.q)?.translation();
        println!(
            "{name:<28} {:<15} iterations {:>3}  residual {:.1e}  flange {:.3?}",
            format!("{:?}", report.termination),
            report.iterations,
            report.residual_norm(),
            x
        );
    }
    Ok(())
}
