use super::{euclidean, GeometryError, Point};
use crate::algebra::Subspace;

impl Point {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self::from_euclidean([x, y, z])
    }

    pub fn from_euclidean(x: [f64; 3]) -> Self {
        let sq = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        Point { coeffs: [1.0, x[0], x[1], x[2], 0.5 * sq] }
    }

    /// The origin `e0`.
    pub fn origin() -> Self {
        Self::from_euclidean([0.0; 3])
    }

    /// Weight of the `e0` blade; 1 for normalized points.
    pub fn weight(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn normalized(&self) -> Result<Self, GeometryError> {
        let w = self.weight();
        if w.abs() < super::EPS_DEGENERATE {
            return Err(GeometryError::DegeneratePoint);
        }
        Ok(self.scale(1.0 / w))
    }

    pub fn to_euclidean(&self) -> Result<[f64; 3], GeometryError> {
        Ok(euclidean(&self.normalized()?.to_multivector()))
    }

    /// Squared Euclidean distance between two normalized points, read from
    /// `P . Q = -0.5 d^2`.
    pub fn distance_squared(&self, other: &Point) -> f64 {
        -2.0 * (self.to_multivector() | other.to_multivector()).scalar_part()
    }

    /// `P . P`, zero for every well-formed point.
    pub fn null_residual(&self) -> f64 {
        let m = self.to_multivector();
        m.inner(&m).scalar_part()
    }
}
