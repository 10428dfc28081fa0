//! Versors: rotors, translators, motors and dilators.
//!
//! All exponentials use the convention `V = exp(-B / 2)` for a generator
//! bivector `B`. A rotation generator `theta e12` turns `e1` towards `e2` by
//! `+theta`. Twist-like generators map to Euclidean pairs `(w, u)` by
//!
//! ```text
//! B = w3 e12 - w2 e13 + w1 e23 + u1 e1inf + u2 e2inf + u3 e3inf
//! ```
//!
//! so that the motion generated by `B` moves a point `x` with velocity
//! `w x x + u`.

mod dilator;
mod generator;
mod motor;
mod rotor;
mod translator;

use thiserror::Error;

use crate::algebra::{Multivector, Product, Subspace};

pub use generator::{MotorGenerator, RotorGenerator, Wrench};
pub use motor::Motor;
pub use rotor::Rotor;
pub use translator::Translator;
pub use dilator::Dilator;

/// Distance from the log branch cut at a rotation of pi (on the scalar part).
pub const EPS_LOG: f64 = 1e-7;

/// Allowed `|V reverse(V) - 1|` for checked application.
pub const EPS_UNIT: f64 = 1e-8;

/// Below this rotation angle series expansions replace the closed forms.
pub(crate) const SMALL_ANGLE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VersorError {
    #[error("versor is not unit: |V reverse(V) - 1| = {0:e}")]
    NotUnitVersor(f64),
    #[error("logarithm is singular at a rotation of pi")]
    LogBranchSingularity,
    #[error("dilation scale must be positive, got {0}")]
    NonPositiveScale(f64),
}

/// Shared interface of the versor types.
pub trait Versor: Subspace + Copy {
    fn reverse(&self) -> Self {
        Self::from_multivector(&self.to_multivector().reverse())
    }

    /// Largest deviation of `V reverse(V)` from 1.
    fn unit_error(&self) -> f64 {
        let v = self.to_multivector();
        let vv = &v * v.reverse();
        vv.iter()
            .map(|(b, c)| if b == 0 { (c - 1.0).abs() } else { c.abs() })
            .fold(0.0, f64::max)
    }

    /// `V X reverse(V)` evaluated only on the blades of `X`, so a point stays
    /// a point. Assumes `V` is unit; see [`Versor::try_apply`].
    fn apply<X: Subspace>(&self, x: &X) -> X {
        let v = self.to_multivector();
        let vx = &v * x.to_multivector();
        X::from_multivector(&vx.product_restricted(Product::Geometric, &v.reverse(), X::BLADES))
    }

    fn try_apply<X: Subspace>(&self, x: &X) -> Result<X, VersorError> {
        let err = self.unit_error();
        if err > EPS_UNIT {
            return Err(VersorError::NotUnitVersor(err));
        }
        Ok(self.apply(x))
    }

    /// Full sandwich of a general multivector, without truncation.
    fn apply_multivector(&self, x: &Multivector) -> Multivector {
        let v = self.to_multivector();
        &v * x * v.reverse()
    }
}

impl Versor for Rotor {}
impl Versor for Translator {}
impl Versor for Motor {}
impl Versor for Dilator {}

macro_rules! compose {
    ($($a:ty, $b:ty => $out:ty;)*) => {$(
        impl std::ops::Mul<$b> for $a {
            type Output = $out;
            fn mul(self, rhs: $b) -> $out {
                crate::algebra::product_into(Product::Geometric, &self, &rhs)
            }
        }
        impl std::ops::Mul<&$b> for &$a {
            type Output = $out;
            fn mul(self, rhs: &$b) -> $out {
                crate::algebra::product_into(Product::Geometric, self, rhs)
            }
        }
    )*};
}

compose! {
    Rotor, Rotor => Rotor;
    Translator, Translator => Translator;
    Motor, Motor => Motor;
    Dilator, Dilator => Dilator;
    Translator, Rotor => Motor;
    Rotor, Translator => Motor;
    Motor, Rotor => Motor;
    Rotor, Motor => Motor;
    Motor, Translator => Motor;
    Translator, Motor => Motor;
}
