use cga_robotics::primitives::{Circle, DualPlane, DualSphere, Line, Plane, Point, PointPair, Sphere};
use cga_robotics::Subspace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = Point::new(1.0, 2.0, 3.0);
    println!("point      {}", p.to_multivector());
    println!("  null residual {:e}", p.null_residual());
    println!("  distance^2 to origin {}", p.distance_squared(&Point::origin()));

    let a = Point::new(1.0, 0.0, 0.0);
    let b = Point::new(0.0, 1.0, 0.0);
    let c = Point::new(-1.0, 0.0, 0.0);
    let d = Point::new(0.0, 0.0, 1.0);

    let (center, radius) = Sphere::from_points(&a, &b, &c, &d)?.decode()?;
    println!("sphere     center {center:?} radius {radius}");
    let (center, radius) = DualSphere::new([0.5, 0.0, 0.0], 2.0)?.decode()?;
    println!("dual sphere center {center:?} radius {radius}");

    let (normal, dist) = Plane::from_points(&a, &b, &d)?.dual().decode()?;
    println!("plane      normal {normal:?} distance {dist}");
    println!("dual plane {}", DualPlane::new([0.0, 0.0, 2.0], 1.0)?.to_multivector());

    let (foot, dir) = Line::from_points(&a, &b)?.decode()?;
    println!("line       foot {foot:?} direction {dir:?}");

    let (center, radius, normal) = Circle::from_points(&a, &b, &c)?.decode()?;
    println!("circle     center {center:?} radius {radius} normal {normal:?}");

    let (p1, p2) = PointPair::from_points(&a, &c)?.decode()?;
    println!("point pair {:?} {:?}", p1.to_euclidean()?, p2.to_euclidean()?);
    Ok(())
}
