use cga_robotics::algebra::{blades::*, parse_blade_name, result_blades, Product};
use cga_robotics::Multivector;

fn main() {
    let a = Multivector::from_terms([(E1, 1.0), (E2, 2.0), (E12, 0.5)]);
    let b = Multivector::from_terms([(E2, -1.0), (E3, 3.0)]);

    println!("a       = {a}");
    println!("b       = {b}");
    println!("a + b   = {}", &a + &b);
    println!("a ^ b   = {}", &a ^ &b);
    println!("a | b   = {}", &a | &b);
    println!("a * b   = {}", &a * &b);
    println!("~a      = {}", a.reverse());
    println!("dual(a) = {}", a.dual());

    // the result blades of a product are known before any arithmetic
    let blades = result_blades(Product::Geometric, a.blades(), b.blades());
    println!("a * b can only touch {} blades", blades.iter().count());

    let einf = Multivector::blade(parse_blade_name("einf").unwrap(), 1.0);
    let e0 = Multivector::blade(parse_blade_name("e0").unwrap(), 1.0);
    println!("e0 . einf = {}", (&e0 | &einf).scalar_part());
    match (&e0 ^ &einf).inverse() {
        Ok(inv) => println!("(e0 ^ einf)^-1 = {inv}"),
        Err(e) => println!("no inverse: {e}"),
    }
}
