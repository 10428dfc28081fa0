use crate::algebra::blades::*;
use crate::subspace_type;

subspace_type! {
    /// Translation versor `1 - t einf / 2`.
    pub struct Translator [SCALAR, E1INF, E2INF, E3INF]
}

impl Translator {
    pub fn new(t: [f64; 3]) -> Self {
        Translator { coeffs: [1.0, -0.5 * t[0], -0.5 * t[1], -0.5 * t[2]] }
    }

    pub fn identity() -> Self {
        Self::new([0.0; 3])
    }

    /// Exact inverse of [`Translator::new`].
    pub fn translation(&self) -> [f64; 3] {
        [-2.0 * self.coeffs[1], -2.0 * self.coeffs[2], -2.0 * self.coeffs[3]]
    }
}
