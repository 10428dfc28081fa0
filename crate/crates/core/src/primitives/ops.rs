use super::{DualPlane, GeometryError, EPS_DEGENERATE};
use crate::algebra::{Multivector, Subspace};

fn nonzero(x: &Multivector) -> Result<(), GeometryError> {
    if x.coeff_norm() < EPS_DEGENERATE {
        Err(GeometryError::DegeneratePrimitive)
    } else {
        Ok(())
    }
}

/// Intersection of two primal-form primitives: `dual(dual(b) ^ dual(a))`.
///
/// Sphere with plane gives a circle, plane with plane a line, line with
/// sphere a point pair. An empty intersection comes back as an imaginary
/// round rather than zero.
pub fn meet(a: &Multivector, b: &Multivector) -> Result<Multivector, GeometryError> {
    nonzero(a)?;
    nonzero(b)?;
    Ok((b.dual() ^ a.dual()).dual())
}

/// Projection of `a` onto `b`: `(a . b) b^-1`.
///
/// Projecting a point onto a primal plane or line gives a dual sphere
/// centered at the foot point, with imaginary radius equal to the distance.
pub fn project(a: &Multivector, b: &Multivector) -> Result<Multivector, GeometryError> {
    nonzero(a)?;
    let inv = b.inverse().map_err(|_| GeometryError::DegeneratePrimitive)?;
    Ok((a | b) * inv)
}

/// Reflection of `x` in a plane: `pi X reverse(pi)`, evaluated on the blades
/// of `X`. The result carries the sign of the reflection, which decoders
/// normalize away.
pub fn reflect<X: Subspace>(x: &X, plane: &DualPlane) -> Result<X, GeometryError> {
    let (n, d) = plane.decode()?;
    let unit = DualPlane::new(n, d)?.to_multivector();
    let r = (&unit * x.to_multivector()).product_restricted(
        crate::algebra::Product::Geometric,
        &unit.reverse(),
        X::BLADES,
    );
    Ok(X::from_multivector(&r))
}
