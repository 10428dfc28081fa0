use cga_robotics::primitives::{meet, project, reflect, Circle, DualPlane, DualSphere, Line, Point, PointPair};
use cga_robotics::Subspace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sphere = DualSphere::new([0.0; 3], 1.0)?.dual();
    let floor = DualPlane::new([0.0, 0.0, 1.0], 0.0)?;
    let wall = DualPlane::new([1.0, 0.0, 0.0], 0.25)?;

    let circle = Circle::from_multivector(&meet(&sphere.to_multivector(), &floor.dual().to_multivector())?);
    let (c, r, n) = circle.decode()?;
    println!("sphere meets floor: circle at {c:?}, r = {r:.3}, normal {n:?}");

    let line = Line::from_multivector(&meet(&floor.dual().to_multivector(), &wall.dual().to_multivector())?);
    let (p, u) = line.decode()?;
    println!("floor meets wall: line through {p:?} along {u:?}");

    let hits = PointPair::from_multivector(&meet(&line.to_multivector(), &sphere.to_multivector())?);
    let (a, b) = hits.decode()?;
    println!("that line pierces the sphere at {:?} and {:?}", a.to_euclidean()?, b.to_euclidean()?);

    let q = Point::new(0.3, -0.2, 0.9);
    println!("signed distance of {:?} to the floor: {}", q.to_euclidean()?, floor.incidence(&q));
    println!("mirror image: {:?}", reflect(&q, &floor)?.to_euclidean()?);

    // the projection is a dual sphere with imaginary radius, centered at the foot point
    let proj = project(&q.to_multivector(), &floor.dual().to_multivector())?;
    println!("foot of the perpendicular: {:?}", Point::from_multivector(&proj).to_euclidean()?);
    println!("as a sphere it is imaginary: {:?}", DualSphere::from_multivector(&proj).decode().err());
    Ok(())
}
