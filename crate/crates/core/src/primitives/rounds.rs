use super::{
    check_wedge, einf, euclidean, Circle, DualSphere, GeometryError, Plane, Point, PointPair,
    Sphere, EPS_DEGENERATE,
};
use crate::algebra::blades::*;
use crate::algebra::{Multivector, Subspace};

/// Squared radius of a primal round (point pair, circle or sphere).
///
/// Negative for imaginary rounds. Returns `None` for flats, whose
/// `einf . X` vanishes.
pub fn round_radius_squared(x: &Multivector) -> Option<f64> {
    let carrier = einf() | x;
    let denom = (&carrier * &carrier).scalar_part();
    if denom.abs() < EPS_DEGENERATE * EPS_DEGENERATE {
        return None;
    }
    Some((x * x.involute()).scalar_part() / denom)
}

/// Center of a primal round, read from the grade-1 part of `X einf X`.
fn round_center(x: &Multivector) -> Result<[f64; 3], GeometryError> {
    let c = x * einf() * x;
    let w = c.get(E0);
    if w.abs() < EPS_DEGENERATE * x.coeff_norm().powi(2).max(f64::MIN_POSITIVE) {
        return Err(GeometryError::DegeneratePrimitive);
    }
    Ok(euclidean(&c).map(|v| v / w))
}

fn real_radius(r2: f64, scale: f64) -> Result<f64, GeometryError> {
    if r2 < -EPS_DEGENERATE * scale.max(1.0) {
        Err(GeometryError::ImaginaryRadius)
    } else {
        Ok(r2.max(0.0).sqrt())
    }
}

fn sq(x: [f64; 3]) -> f64 {
    x[0] * x[0] + x[1] * x[1] + x[2] * x[2]
}

impl DualSphere {
    /// `Pc - 0.5 r^2 einf`.
    pub fn new(center: [f64; 3], radius: f64) -> Result<Self, GeometryError> {
        if radius < 0.0 {
            return Err(GeometryError::NegativeRadius(radius));
        }
        let mut s = Point::from_euclidean(center).coeffs().to_vec();
        s[4] -= 0.5 * radius * radius;
        Ok(Self::from_coeffs(&s))
    }

    /// Sphere of radius zero at `p`.
    pub fn from_point(p: &Point) -> Self {
        Self::from_coeffs(p.coeffs())
    }

    /// Center and radius.
    pub fn decode(&self) -> Result<([f64; 3], f64), GeometryError> {
        let w = self.get(E0);
        if w.abs() < EPS_DEGENERATE * self.coeff_norm().max(f64::MIN_POSITIVE) {
            return Err(GeometryError::DegeneratePrimitive);
        }
        let s = self.scale(1.0 / w).to_multivector();
        let center = euclidean(&s);
        let r2 = s.inner(&s).scalar_part();
        Ok((center, real_radius(r2, sq(center))?))
    }

    pub fn dual(&self) -> Sphere {
        Sphere::from_multivector(&self.to_multivector().dual())
    }
}

impl Sphere {
    pub fn from_points(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> Result<Self, GeometryError> {
        let w = p1.to_multivector() ^ p2.to_multivector() ^ p3.to_multivector() ^ p4.to_multivector();
        check_wedge(
            &w,
            &[p1.coeff_norm(), p2.coeff_norm(), p3.coeff_norm(), p4.coeff_norm()],
        )?;
        Ok(Self::from_multivector(&w))
    }

    pub fn dual(&self) -> DualSphere {
        DualSphere::from_multivector(&-self.to_multivector().dual())
    }

    pub fn decode(&self) -> Result<([f64; 3], f64), GeometryError> {
        self.dual().decode()
    }
}

impl Circle {
    pub fn from_points(p1: &Point, p2: &Point, p3: &Point) -> Result<Self, GeometryError> {
        let w = p1.to_multivector() ^ p2.to_multivector() ^ p3.to_multivector();
        check_wedge(&w, &[p1.coeff_norm(), p2.coeff_norm(), p3.coeff_norm()])?;
        Ok(Self::from_multivector(&w))
    }

    /// Center, radius and unit normal of the carrier plane.
    pub fn decode(&self) -> Result<([f64; 3], f64, [f64; 3]), GeometryError> {
        let x = self.to_multivector();
        let center = round_center(&x)?;
        let r2 = round_radius_squared(&x).ok_or(GeometryError::DegeneratePrimitive)?;
        let radius = real_radius(r2, sq(center))?;
        let plane = Plane::from_multivector(&(x ^ einf()));
        let (normal, _) = plane.dual().decode()?;
        Ok((center, radius, normal))
    }

    /// The plane containing the circle.
    pub fn carrier(&self) -> Plane {
        Plane::from_multivector(&(self.to_multivector() ^ einf()))
    }
}

impl PointPair {
    pub fn from_points(p1: &Point, p2: &Point) -> Result<Self, GeometryError> {
        let w = p1.to_multivector() ^ p2.to_multivector();
        check_wedge(&w, &[p1.coeff_norm(), p2.coeff_norm()])?;
        Ok(Self::from_multivector(&w))
    }

    /// `PP . PP`: positive for real pairs, negative for imaginary ones.
    pub fn square(&self) -> f64 {
        let m = self.to_multivector();
        m.inner(&m).scalar_part()
    }

    /// The two points of the pair, each normalized.
    pub fn decode(&self) -> Result<(Point, Point), GeometryError> {
        let pp = self.to_multivector();
        let sq = self.square();
        let scale = pp.coeff_norm().powi(2);
        if scale < EPS_DEGENERATE * EPS_DEGENERATE {
            return Err(GeometryError::DegeneratePrimitive);
        }
        if sq < -EPS_DEGENERATE * scale {
            return Err(GeometryError::ImaginaryRadius);
        }
        let delta = sq.max(0.0).sqrt();
        let carrier = einf() | &pp;
        let split = |s: f64| {
            let p = (&pp + Multivector::scalar(s)) * &carrier;
            Point::from_multivector(&p).normalized()
        };
        Ok((split(-delta)?, split(delta)?))
    }
}
