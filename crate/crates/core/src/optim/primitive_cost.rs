use nalgebra::{DMatrix, DVector};

use super::{Cost, OptimError};
use crate::algebra::{blades, BladeSet, Multivector, Product, Subspace};
use crate::primitives::{Circle, GeometryError, Line, Plane, Point, PointPair, Sphere, EPS_DEGENERATE};
use crate::robot::Manipulator;
use crate::versors::Motor;

/// Tool or target primitive, in primal form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Primitive {
    Point(Point),
    Line(Line),
    PointPair(PointPair),
    Circle(Circle),
    Plane(Plane),
    Sphere(Sphere),
}

impl Primitive {
    pub fn kind(&self) -> &'static str {
        match self {
            Primitive::Point(_) => "point",
            Primitive::Line(_) => "line",
            Primitive::PointPair(_) => "point pair",
            Primitive::Circle(_) => "circle",
            Primitive::Plane(_) => "plane",
            Primitive::Sphere(_) => "sphere",
        }
    }

    pub fn to_multivector(&self) -> Multivector {
        match self {
            Primitive::Point(x) => x.to_multivector(),
            Primitive::Line(x) => x.to_multivector(),
            Primitive::PointPair(x) => x.to_multivector(),
            Primitive::Circle(x) => x.to_multivector(),
            Primitive::Plane(x) => x.to_multivector(),
            Primitive::Sphere(x) => x.to_multivector(),
        }
    }

    fn blades(&self) -> BladeSet {
        match self {
            Primitive::Point(_) => Point::BLADES,
            Primitive::Line(_) => Line::BLADES,
            Primitive::PointPair(_) => PointPair::BLADES,
            Primitive::Circle(_) => Circle::BLADES,
            Primitive::Plane(_) => Plane::BLADES,
            Primitive::Sphere(_) => Sphere::BLADES,
        }
    }

    fn grade(&self) -> u32 {
        self.blades().iter().next().map_or(0, crate::algebra::grade)
    }

    /// Rescaled so that residuals carry geometric units where possible:
    /// points to unit weight, lines and planes to unit direction or normal,
    /// spheres to a unit-weight dual form.
    fn normalized(&self) -> Result<Self, GeometryError> {
        let norm = self.to_multivector().coeff_norm();
        if norm < EPS_DEGENERATE {
            return Err(GeometryError::DegeneratePrimitive);
        }
        Ok(match self {
            Primitive::Point(p) => Primitive::Point(p.normalized()?),
            Primitive::Line(l) => Primitive::Line(l.normalized()?),
            Primitive::Plane(p) => {
                let d = p.dual();
                let len = (0..3).map(|i| d.coeffs()[i].powi(2)).sum::<f64>().sqrt();
                if len < EPS_DEGENERATE {
                    return Err(GeometryError::DegeneratePrimitive);
                }
                Primitive::Plane(p.scale(1.0 / len))
            }
            Primitive::Sphere(s) => {
                let w = s.dual().coeffs()[0];
                if w.abs() < EPS_DEGENERATE * norm {
                    return Err(GeometryError::DegeneratePrimitive);
                }
                Primitive::Sphere(s.scale(1.0 / w))
            }
            Primitive::PointPair(x) => Primitive::PointPair(x.scale(1.0 / norm)),
            Primitive::Circle(x) => Primitive::Circle(x.scale(1.0 / norm)),
        })
    }
}

/// How the moved tool `X` is compared with the target `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Encoding {
    /// `X - T`, on the Euclidean blades for points (so the value is half the
    /// squared distance) and on all blades for lines.
    Difference,
    /// `X ^ T`, zero when the tool point lies on the target.
    ToolWedgeTarget,
    /// `T ^ X`, zero when the target point lies on the tool line.
    TargetWedgeTool,
}

/// Incidence cost between a primitive carried by the end effector and a
/// fixed target primitive.
///
/// Supported pairs: a point tool with any target, a line tool with a point
/// or line target.
#[derive(Debug, Clone)]
pub struct PrimitiveTargetCost<'a> {
    manipulator: &'a Manipulator,
    tool: Primitive,
    target: Primitive,
    encoding: Encoding,
    tool_blades: BladeSet,
    out_blades: BladeSet,
}

impl<'a> PrimitiveTargetCost<'a> {
    /// `tool` is given in the end-effector frame, `target` in the world.
    pub fn new(manipulator: &'a Manipulator, tool: Primitive, target: Primitive) -> Result<Self, OptimError> {
        let tool = tool.normalized()?;
        let target = target.normalized()?;
        let encoding = match (&tool, &target) {
            (Primitive::Point(_), Primitive::Point(_)) | (Primitive::Line(_), Primitive::Line(_)) => {
                Encoding::Difference
            }
            (Primitive::Point(_), _) => Encoding::ToolWedgeTarget,
            (Primitive::Line(_), Primitive::Point(_)) => Encoding::TargetWedgeTool,
            _ => return Err(OptimError::UnsupportedPair { tool: tool.kind(), target: target.kind() }),
        };
        let out_blades = match encoding {
            Encoding::Difference if matches!(tool, Primitive::Point(_)) => {
                BladeSet::from_blades(&[blades::E1, blades::E2, blades::E3])
            }
            Encoding::Difference => tool.blades(),
            _ => BladeSet::of_grade(tool.grade() + target.grade()),
        };
        Ok(PrimitiveTargetCost { manipulator, tool, target, encoding, tool_blades: tool.blades(), out_blades })
    }

    pub fn tool(&self) -> &Primitive {
        &self.tool
    }

    pub fn target(&self) -> &Primitive {
        &self.target
    }

    /// The tool moved into the world frame at `q`.
    pub fn moved_tool(&self, q: &[f64]) -> Result<Multivector, OptimError> {
        let m = self.manipulator.forward_kinematics(q)?;
        Ok(self.move_tool(&m))
    }

    fn move_tool(&self, m: &Motor) -> Multivector {
        let x = self.tool.to_multivector();
        let mv = m.to_multivector();
        (&mv * &x).product_restricted(Product::Geometric, &mv.reverse(), self.tool_blades)
    }

    /// The comparison, linear in the moved tool.
    fn encode(&self, x: &Multivector, affine: bool) -> DVector<f64> {
        let t = self.target.to_multivector();
        let r = match self.encoding {
            Encoding::Difference if affine => x - &t,
            Encoding::Difference => x.clone(),
            Encoding::ToolWedgeTarget => x ^ &t,
            Encoding::TargetWedgeTool => &t ^ x,
        };
        DVector::from_iterator(self.out_blades.len(), self.out_blades.iter().map(|b| r.get(b)))
    }
}

impl Cost for PrimitiveTargetCost<'_> {
    fn dof(&self) -> usize {
        self.manipulator.dof()
    }

    fn residual(&self, q: &[f64]) -> Result<DVector<f64>, OptimError> {
        Ok(self.encode(&self.moved_tool(q)?, true))
    }

    fn jacobian(&self, q: &[f64]) -> Result<DMatrix<f64>, OptimError> {
        let x = self.moved_tool(q)?;
        let cols = self.manipulator.geometric_jacobian(q)?;
        let mut jac = DMatrix::zeros(self.out_blades.len(), cols.len());
        for (i, j) in cols.iter().enumerate() {
            // d/dq_i (M X reverse(M)) = (X J_i - J_i X) / 2
            let jm = j.to_multivector();
            let dx = ((&x * &jm - &jm * &x) * 0.5).restrict(self.tool_blades);
            jac.set_column(i, &self.encode(&dx, false));
        }
        Ok(jac)
    }
}
