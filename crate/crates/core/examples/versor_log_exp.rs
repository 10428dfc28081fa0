use std::f64::consts::FRAC_PI_3;

use cga_robotics::versors::{Dilator, Motor, MotorGenerator, Rotor, RotorGenerator, Translator, Versor};
use cga_robotics::Subspace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = Rotor::from_axis_angle([0.0, 0.0, 1.0], FRAC_PI_3);
    let back = r.log()?;
    println!("rotor {:?}", r.coeffs());
    println!("  log -> rotation vector {:?} (|w| = {:.6})", back.rotation_vector(), back.angle());
    println!("  exp(log) == rotor: {}", Rotor::exp(&back).approx_eq(&r, 1e-12));

    let t = Translator::new([0.5, 0.0, 0.25]);
    let m = Motor::from_translation_rotor(t.translation(), &r);
    let g = m.log()?;
    println!("motor {:?}", m.coeffs());
    println!("  twist w = {:?}, u = {:?}", g.rotation(), g.translation());
    println!("  exp(log) == motor: {}", Motor::exp(&g).approx_eq(&m, 1e-12));

    // half the twist gives a motor that, applied twice, is the original
    let half = Motor::exp(&MotorGenerator::from_array(g.to_array().map(|c| c * 0.5)));
    println!("  half * half == motor: {}", (half * half).approx_eq(&m, 1e-12));
    println!("  unit error {:e}", m.unit_error());

    let spin = Rotor::exp(&RotorGenerator::from_rotation_vector([0.1, 0.2, 0.3]));
    println!("rotor matrix{:.4}", spin.to_matrix());

    let d = Dilator::from_scale(2.0)?;
    println!("dilator scale {}", d.scale());
    Ok(())
}
