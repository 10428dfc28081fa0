use nalgebra::{Matrix4, Vector3};

use super::rotor::{half_sinc, log_angle};
use super::{MotorGenerator, Rotor, Translator, Versor, VersorError, SMALL_ANGLE};
use crate::algebra::blades::*;
use crate::algebra::Subspace;
use crate::primitives::{dot, Point};
use crate::subspace_type;

subspace_type! {
    /// Rigid-body motion `T R`.
    ///
    /// Layout: scalar, the rotation bivectors `e12, e13, e23`, the
    /// translation bivectors `e1inf, e2inf, e3inf` and `e123inf`.
    pub struct Motor [SCALAR, E12, E13, E23, E1INF, E2INF, E3INF, E123INF]
}

/// `(sin(theta/2)/theta - cos(theta/2)/2) / theta^2`.
fn screw_coefficient(theta: f64, s: f64) -> f64 {
    if theta < SMALL_ANGLE {
        let t2 = theta * theta;
        1.0 / 24.0 - t2 / 960.0
    } else {
        (s - 0.5 * (0.5 * theta).cos()) / (theta * theta)
    }
}

impl Motor {
    pub fn identity() -> Self {
        let mut c = [0.0; 8];
        c[0] = 1.0;
        Motor { coeffs: c }
    }

    /// `T(t) R`: rotate first, then translate by `t`.
    pub fn from_translation_rotor(t: [f64; 3], r: &Rotor) -> Self {
        Translator::new(t) * *r
    }

    /// Frame with origin `xyz` and orientation given by fixed-axis
    /// roll, pitch, yaw.
    pub fn from_xyz_rpy(xyz: [f64; 3], rpy: [f64; 3]) -> Self {
        Self::from_translation_rotor(xyz, &Rotor::from_rpy(rpy[0], rpy[1], rpy[2]))
    }

    /// Closed-form screw exponential `exp(-G / 2)`.
    pub fn exp(g: &MotorGenerator) -> Self {
        let w = g.rotation();
        let u = g.translation();
        let theta = dot(w, w).sqrt();
        let s = half_sinc(theta);
        let k = screw_coefficient(theta, s);
        let uw = dot(u, w);
        let b = &g.coeffs()[..3];
        Motor {
            coeffs: [
                (0.5 * theta).cos(),
                -s * b[0],
                -s * b[1],
                -s * b[2],
                -s * u[0] + k * uw * w[0],
                -s * u[1] + k * uw * w[1],
                -s * u[2] + k * uw * w[2],
                0.5 * s * uw,
            ],
        }
    }

    /// Inverse of [`Motor::exp`] for rotation angles in `[0, 2 pi)`.
    pub fn log(&self) -> Result<MotorGenerator, VersorError> {
        let c = &self.coeffs;
        let a = c[0];
        let bn = (c[1] * c[1] + c[2] * c[2] + c[3] * c[3]).sqrt();
        let (theta, s) = log_angle(a, bn)?;
        let rot = [-c[1] / s, -c[2] / s, -c[3] / s];
        let gen_rot = MotorGenerator::from_coeffs(&[rot[0], rot[1], rot[2], 0.0, 0.0, 0.0]);
        let w = gen_rot.rotation();
        let v = [c[4], c[5], c[6]];
        let q = c[7];
        // u . w from v . w = -a (u . w) / 2 and q = s (u . w) / 2, least squares
        let x = (-0.5 * a * dot(v, w) + 0.5 * s * q) / (0.25 * a * a + 0.25 * s * s);
        let k = screw_coefficient(theta, s);
        let u = [0, 1, 2].map(|i| (k * x * w[i] - v[i]) / s);
        Ok(MotorGenerator::new(w, u))
    }

    /// Rotational part (the Euclidean even blades).
    pub fn rotor(&self) -> Rotor {
        Rotor::from_coeffs(&self.coeffs[..4])
    }

    /// Image of the origin.
    pub fn translation(&self) -> [f64; 3] {
        self.apply(&Point::origin()).to_euclidean().expect("motor maps points to finite points")
    }

    pub fn translator(&self) -> Translator {
        Translator::new(self.translation())
    }

    /// Homogeneous transform of the motion.
    pub fn to_homogeneous(&self) -> Matrix4<f64> {
        let mut m = Matrix4::identity();
        m.fixed_view_mut::<3, 3>(0, 0).copy_from(&self.rotor().to_matrix());
        m.fixed_view_mut::<3, 1>(0, 3).copy_from(&Vector3::from(self.translation()));
        m
    }

    /// Transforms a Euclidean point.
    pub fn transform_point(&self, x: [f64; 3]) -> [f64; 3] {
        self.apply(&Point::from_euclidean(x)).to_euclidean().expect("motor maps points to finite points")
    }

    /// `-M` when the scalar part is negative; both represent the same motion.
    pub fn canonical(&self) -> Self {
        if self.coeffs[0] < 0.0 {
            self.scale(-1.0)
        } else {
            *self
        }
    }
}

impl From<Rotor> for Motor {
    fn from(r: Rotor) -> Self {
        Motor::from_multivector(&r.to_multivector())
    }
}

impl From<Translator> for Motor {
    fn from(t: Translator) -> Self {
        Motor::from_multivector(&t.to_multivector())
    }
}
