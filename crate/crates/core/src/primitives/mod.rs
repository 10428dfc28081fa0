//! Geometric primitives: fixed-subspace multivectors with constructors,
//! Euclidean decoders and incidence operations.
//!
//! Points and round or flat objects built from points are stored in primal
//! (outer product) form. Spheres and planes given by parameters are stored in
//! dual form as grade-1 vectors; [`Sphere::dual`] and [`DualSphere::dual`]
//! convert between the two.

mod flats;
mod ops;
mod point;
mod rounds;
mod vectors;

use thiserror::Error;

use crate::algebra::blades::*;
use crate::algebra::Multivector;
use crate::subspace_type;

pub use ops::{meet, project, reflect};
pub use rounds::round_radius_squared;

/// Relative threshold for degenerate wedge products.
pub const EPS_DEGENERATE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("point has vanishing e0 weight (point at infinity)")]
    DegeneratePoint,
    #[error("defining points are coincident, collinear or coplanar")]
    DegenerateConfiguration,
    #[error("primitive has (near) zero norm")]
    DegeneratePrimitive,
    #[error("primitive has imaginary radius")]
    ImaginaryRadius,
    #[error("radius must be non-negative, got {0}")]
    NegativeRadius(f64),
}

subspace_type! {
    /// Euclidean vector `x1 e1 + x2 e2 + x3 e3`.
    pub struct Vector [E1, E2, E3]
}

subspace_type! {
    /// Free direction `v ^ einf`.
    pub struct DirectionVector [E1INF, E2INF, E3INF]
}

subspace_type! {
    /// Direction anchored at a point, `P . (P ^ v ^ einf)`.
    pub struct TangentVector [E01, E02, E12, E03, E13, E23, E0INF, E1INF, E2INF, E3INF]
}

subspace_type! {
    /// Conformal point `x + 0.5 |x|^2 einf + e0`.
    pub struct Point [E0, E1, E2, E3, EINF]
}

subspace_type! {
    /// Pair of points `P1 ^ P2`.
    pub struct PointPair [E01, E02, E12, E03, E13, E23, E0INF, E1INF, E2INF, E3INF]
}

subspace_type! {
    /// Line `P1 ^ P2 ^ einf`.
    pub struct Line [E01INF, E02INF, E12INF, E03INF, E13INF, E23INF]
}

subspace_type! {
    /// Circle `P1 ^ P2 ^ P3`.
    pub struct Circle [E012, E013, E023, E123, E01INF, E02INF, E12INF, E03INF, E13INF, E23INF]
}

subspace_type! {
    /// Plane in primal form `P1 ^ P2 ^ P3 ^ einf`.
    pub struct Plane [E012INF, E013INF, E023INF, E123INF]
}

subspace_type! {
    /// Sphere in primal form `P1 ^ P2 ^ P3 ^ P4`.
    pub struct Sphere [E0123, E012INF, E013INF, E023INF, E123INF]
}

subspace_type! {
    /// Plane in dual form `n + d einf`.
    pub struct DualPlane [E1, E2, E3, EINF]
}

subspace_type! {
    /// Sphere in dual form `Pc - 0.5 r^2 einf`.
    pub struct DualSphere [E0, E1, E2, E3, EINF]
}

fn einf() -> Multivector {
    Multivector::blade(EINF, 1.0)
}

fn euclidean(mv: &Multivector) -> [f64; 3] {
    [mv.get(E1), mv.get(E2), mv.get(E3)]
}

/// Checks that a wedge result is not degenerate relative to its inputs.
fn check_wedge(result: &Multivector, input_norms: &[f64]) -> Result<(), GeometryError> {
    let scale: f64 = input_norms.iter().product();
    if result.coeff_norm() <= EPS_DEGENERATE * scale.max(f64::MIN_POSITIVE) {
        Err(GeometryError::DegenerateConfiguration)
    } else {
        Ok(())
    }
}

pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm3(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}
