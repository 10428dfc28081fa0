use super::{
    check_wedge, cross, dot, einf, norm3, DualPlane, GeometryError, Line, Plane, Point,
    EPS_DEGENERATE,
};
use crate::algebra::blades::*;
use crate::algebra::Subspace;

impl DualPlane {
    /// Plane `{x : x . n = d}` with `n` normalized to unit length.
    pub fn new(normal: [f64; 3], distance: f64) -> Result<Self, GeometryError> {
        let len = norm3(normal);
        if len < EPS_DEGENERATE {
            return Err(GeometryError::DegeneratePrimitive);
        }
        let n = normal.map(|c| c / len);
        Ok(DualPlane { coeffs: [n[0], n[1], n[2], distance] })
    }

    /// Unit normal and signed distance from the origin.
    pub fn decode(&self) -> Result<([f64; 3], f64), GeometryError> {
        let n = [self.coeffs[0], self.coeffs[1], self.coeffs[2]];
        let len = norm3(n);
        if len < EPS_DEGENERATE {
            return Err(GeometryError::DegeneratePrimitive);
        }
        Ok((n.map(|c| c / len), self.coeffs[3] / len))
    }

    pub fn dual(&self) -> Plane {
        Plane::from_multivector(&self.to_multivector().dual())
    }

    /// `P . pi`: signed distance of a normalized point for a unit-normal plane.
    pub fn incidence(&self, p: &Point) -> f64 {
        (p.to_multivector() | self.to_multivector()).scalar_part()
    }
}

impl Plane {
    pub fn from_points(p1: &Point, p2: &Point, p3: &Point) -> Result<Self, GeometryError> {
        let w = p1.to_multivector() ^ p2.to_multivector() ^ p3.to_multivector() ^ einf();
        check_wedge(&w, &[p1.coeff_norm(), p2.coeff_norm(), p3.coeff_norm()])?;
        Ok(Self::from_multivector(&w))
    }

    pub fn dual(&self) -> DualPlane {
        // the double dual negates; undo it so the conversion round-trips
        DualPlane::from_multivector(&-self.to_multivector().dual())
    }
}

impl Line {
    pub fn from_points(p1: &Point, p2: &Point) -> Result<Self, GeometryError> {
        let w = p1.to_multivector() ^ p2.to_multivector() ^ einf();
        check_wedge(&w, &[p1.coeff_norm(), p2.coeff_norm()])?;
        Ok(Self::from_multivector(&w))
    }

    /// Line through `point` with direction `dir`.
    pub fn from_point_direction(point: [f64; 3], dir: [f64; 3]) -> Result<Self, GeometryError> {
        let q = [point[0] + dir[0], point[1] + dir[1], point[2] + dir[2]];
        Self::from_points(&Point::from_euclidean(point), &Point::from_euclidean(q))
    }

    /// Raw direction (`e0 ei einf` coefficients) and moment `x x u`.
    fn direction_moment(&self) -> ([f64; 3], [f64; 3]) {
        let u = [self.get(E01INF), self.get(E02INF), self.get(E03INF)];
        let m = [self.get(E23INF), -self.get(E13INF), self.get(E12INF)];
        (u, m)
    }

    /// Point closest to the origin and unit direction.
    pub fn decode(&self) -> Result<([f64; 3], [f64; 3]), GeometryError> {
        let (u, m) = self.direction_moment();
        let len2 = dot(u, u);
        if len2 < EPS_DEGENERATE * EPS_DEGENERATE {
            return Err(GeometryError::DegeneratePrimitive);
        }
        let p = cross(u, m).map(|c| c / len2);
        let len = len2.sqrt();
        Ok((p, u.map(|c| c / len)))
    }

    /// Scaled so that the direction has unit length.
    pub fn normalized(&self) -> Result<Self, GeometryError> {
        let (u, _) = self.direction_moment();
        let len = norm3(u);
        if len < EPS_DEGENERATE {
            return Err(GeometryError::DegeneratePrimitive);
        }
        Ok(self.scale(1.0 / len))
    }
}
