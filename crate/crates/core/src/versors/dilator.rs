use super::VersorError;
use crate::algebra::blades::*;
use crate::subspace_type;

subspace_type! {
    /// Uniform scaling about the origin, `cosh(a) + sinh(a) e0inf` with
    /// `a = ln(scale) / 2`.
    pub struct Dilator [SCALAR, E0INF]
}

impl Dilator {
    pub fn from_scale(scale: f64) -> Result<Self, VersorError> {
        if scale <= 0.0 || !scale.is_finite() {
            return Err(VersorError::NonPositiveScale(scale));
        }
        let a = 0.5 * scale.ln();
        Ok(Dilator { coeffs: [a.cosh(), a.sinh()] })
    }

    pub fn scale(&self) -> f64 {
        (2.0 * (self.coeffs[1] / self.coeffs[0]).atanh()).exp()
    }
}
