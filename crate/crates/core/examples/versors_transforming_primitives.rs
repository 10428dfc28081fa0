use std::f64::consts::FRAC_PI_2;

use cga_robotics::primitives::{Circle, DualPlane, DualSphere, Line, Point};
use cga_robotics::versors::{Motor, Rotor, Translator, Versor};
use cga_robotics::Subspace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let quarter = Rotor::from_axis_angle([0.0, 0.0, 1.0], FRAC_PI_2);
    let lift = Translator::new([0.0, 0.0, 1.0]);
    let m = Motor::from_translation_rotor(lift.translation(), &quarter);

    let p = Point::new(1.0, 0.0, 0.0);
    println!("point  {:?} -> {:?}", p.to_euclidean()?, m.apply(&p).to_euclidean()?);

    let (c, r) = m.apply(&DualSphere::new([1.0, 0.0, 0.0], 0.5)?).decode()?;
    println!("sphere moves to {c:?}, radius still {r}");

    let (n, d) = m.apply(&DualPlane::new([1.0, 0.0, 0.0], 2.0)?).decode()?;
    println!("plane  normal {n:?}, distance {d}");

    let (foot, dir) = m.apply(&Line::from_point_direction([1.0, 0.0, 0.0], [1.0, 0.0, 0.0])?).decode()?;
    println!("line   through {foot:?} along {dir:?}");

    let circle = Circle::from_points(&Point::new(1.0, 0.0, 0.0), &Point::new(0.0, 1.0, 0.0), &Point::new(-1.0, 0.0, 0.0))?;
    let (c, r, n) = m.apply(&circle).decode()?;
    println!("circle center {c:?}, radius {r}, normal {n:?}");

    // try_apply refuses versors that are not unit
    let sloppy = Motor::from_coeffs(&[1.1, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    println!("non-unit motor: {:?}", sloppy.try_apply(&p).err());
    Ok(())
}
