use super::{einf, DirectionVector, Point, TangentVector, Vector};
use crate::algebra::Subspace;

impl Vector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vector { coeffs: [x, y, z] }
    }

    pub fn to_array(&self) -> [f64; 3] {
        self.coeffs
    }
}

impl DirectionVector {
    /// `v ^ einf`.
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        DirectionVector { coeffs: [x, y, z] }
    }

    pub fn direction(&self) -> [f64; 3] {
        self.coeffs
    }
}

impl TangentVector {
    /// Tangent of direction `v` anchored at `p`: `P . (P ^ v ^ einf)`.
    pub fn new(p: &Point, v: [f64; 3]) -> Self {
        let pm = p.to_multivector();
        let flat = &pm ^ (Vector::new(v[0], v[1], v[2]).to_multivector() ^ einf());
        Self::from_multivector(&(&pm | &flat))
    }
}

impl From<Vector> for DirectionVector {
    fn from(v: Vector) -> Self {
        DirectionVector { coeffs: v.coeffs }
    }
}
