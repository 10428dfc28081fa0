#![allow(dead_code)]

pub mod classical;
pub mod dense;

use cga_robotics::Multivector;
use rand::Rng;

pub fn to_dense(m: &Multivector) -> dense::Dense {
    m.to_dense()
}

/// Multivector with each blade present with probability `density` and
/// coefficients uniform in [-1, 1].
pub fn random_mv<R: Rng>(rng: &mut R, density: f64) -> Multivector {
    let mut terms = Vec::new();
    for b in 0..32u8 {
        if rng.gen_bool(density) {
            terms.push((b, rng.gen_range(-1.0..1.0)));
        }
    }
    Multivector::from_terms(terms)
}
