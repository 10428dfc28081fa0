use nalgebra::Matrix3;

use super::{RotorGenerator, Versor, VersorError, EPS_LOG, SMALL_ANGLE};
use crate::algebra::blades::*;
use crate::algebra::Subspace;
use crate::primitives::Vector;
use crate::subspace_type;

subspace_type! {
    /// Rotation versor `cos(theta/2) - sin(theta/2) B`.
    pub struct Rotor [SCALAR, E12, E13, E23]
}

/// `sin(theta/2) / theta`.
pub(crate) fn half_sinc(theta: f64) -> f64 {
    if theta < SMALL_ANGLE {
        let t2 = theta * theta;
        0.5 - t2 / 48.0 + t2 * t2 / 3840.0
    } else {
        (0.5 * theta).sin() / theta
    }
}

/// Rotation angle in `[0, 2 pi)` and `sin(theta/2) / theta` for a unit
/// versor with scalar part `a` and Euclidean bivector norm `b`.
pub(crate) fn log_angle(a: f64, b: f64) -> Result<(f64, f64), VersorError> {
    if a <= -1.0 + EPS_LOG {
        return Err(VersorError::LogBranchSingularity);
    }
    let theta = 2.0 * b.atan2(a);
    Ok((theta, half_sinc(theta)))
}

impl Rotor {
    pub fn identity() -> Self {
        Rotor { coeffs: [1.0, 0.0, 0.0, 0.0] }
    }

    pub fn exp(g: &RotorGenerator) -> Self {
        let theta = g.angle();
        let s = half_sinc(theta);
        let b = g.coeffs();
        Rotor { coeffs: [(0.5 * theta).cos(), -s * b[0], -s * b[1], -s * b[2]] }
    }

    /// Inverse of [`Rotor::exp`] for rotation angles in `[0, 2 pi)`.
    pub fn log(&self) -> Result<RotorGenerator, VersorError> {
        let b = &self.coeffs[1..];
        let bn = (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt();
        let (_, s) = log_angle(self.coeffs[0], bn)?;
        Ok(RotorGenerator::from_coeffs(&[-b[0] / s, -b[1] / s, -b[2] / s]))
    }

    /// Rotation by `angle` about `axis` (normalized here).
    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> Self {
        let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        if n == 0.0 {
            return Self::identity();
        }
        Self::exp(&RotorGenerator::from_rotation_vector(axis.map(|c| c * angle / n)))
    }

    /// Fixed-axis roll, pitch, yaw: `Rz(yaw) Ry(pitch) Rx(roll)`.
    pub fn from_rpy(roll: f64, pitch: f64, yaw: f64) -> Self {
        Self::from_axis_angle([0.0, 0.0, 1.0], yaw)
            * Self::from_axis_angle([0.0, 1.0, 0.0], pitch)
            * Self::from_axis_angle([1.0, 0.0, 0.0], roll)
    }

    pub fn rotate(&self, v: [f64; 3]) -> [f64; 3] {
        self.apply(&Vector::new(v[0], v[1], v[2])).to_array()
    }

    pub fn to_matrix(&self) -> Matrix3<f64> {
        let mut m = Matrix3::zeros();
        for j in 0..3 {
            let mut e = [0.0; 3];
            e[j] = 1.0;
            let c = self.rotate(e);
            for i in 0..3 {
                m[(i, j)] = c[i];
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primitives::Point;
    use std::f64::consts::PI;

    #[test]
    fn identity_and_quarter_turn() {
        assert_eq!(Rotor::exp(&RotorGenerator::from_coeffs(&[0.0; 3])), Rotor::identity());
        let r = Rotor::exp(&RotorGenerator::from_coeffs(&[PI / 2.0, 0.0, 0.0]));
        let p = r.apply(&Point::new(1.0, 0.0, 0.0)).to_euclidean().unwrap();
        assert!((p[0]).abs() < 1e-12 && (p[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn log_roundtrip() {
        for theta in [-3.0, -1.0, 1e-9, 0.0, 0.5, 3.1] {
            let g = RotorGenerator::from_coeffs(&[theta, 0.0, 0.0]);
            let back = Rotor::exp(&g).log().unwrap();
            assert!(back.approx_eq(&g, 1e-12), "{theta}: {back:?}");
        }
        let half = Rotor { coeffs: [-1.0, 0.0, 0.0, 0.0] };
        assert_eq!(half.log(), Err(VersorError::LogBranchSingularity));
    }

    #[test]
    fn matrix_is_rotation() {
        let r = Rotor::from_rpy(0.3, -0.2, 1.1);
        let m = r.to_matrix();
        assert!((m.transpose() * m - Matrix3::identity()).abs().max() < 1e-12);
        assert!((m.determinant() - 1.0).abs() < 1e-12);
        let z = Rotor::from_axis_angle([0.0, 0.0, 1.0], 0.7).to_matrix();
        assert!((z[(1, 0)] - 0.7f64.sin()).abs() < 1e-12);
    }
}
