use crate::optim::Primitive;
use crate::primitives::{Circle, DualPlane, DualSphere, Line, Point, PointPair};
use crate::versors::Motor;

/// An IK goal parsed from `kind:v1,v2,...`.
#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    Pose(Motor),
    Primitive(Primitive),
}

pub const TARGET_HELP: &str = "\
pose:x,y,z,roll,pitch,yaw | point:x,y,z | line:px,py,pz,dx,dy,dz | \
plane:nx,ny,nz,d | sphere:cx,cy,cz,r | circle:cx,cy,cz,nx,ny,nz,r | \
pointpair:x1,y1,z1,x2,y2,z2";

fn numbers(kind: &str, body: &str, n: usize) -> Result<Vec<f64>, String> {
    let v: Vec<f64> = body
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("bad number `{t}` in {kind} target")))
        .collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(format!("{kind} target takes {n} numbers, got {}", v.len()));
    }
    Ok(v)
}

fn arr(v: &[f64]) -> [f64; 3] {
    [v[0], v[1], v[2]]
}

/// Orthonormal pair spanning the plane with normal `n`.
fn plane_basis(n: [f64; 3]) -> Result<([f64; 3], [f64; 3]), String> {
    let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
    if len < 1e-12 {
        return Err("circle normal is zero".into());
    }
    let n = n.map(|c| c / len);
    let seed = if n[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let cross = |a: [f64; 3], b: [f64; 3]| {
        [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
    };
    let u = cross(n, seed);
    let ul = (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt();
    let u = u.map(|c| c / ul);
    Ok((u, cross(n, u)))
}

pub fn parse_target(text: &str) -> Result<Target, String> {
    let (kind, body) = text
        .split_once(':')
        .ok_or_else(|| format!("target `{text}` must look like kind:values ({TARGET_HELP})"))?;
    let geo = |e: crate::primitives::GeometryError| format!("{kind} target: {e}");
    let prim = match kind {
        "pose" => {
            let v = numbers(kind, body, 6)?;
            return Ok(Target::Pose(Motor::from_xyz_rpy(arr(&v), arr(&v[3..]))));
        }
        "point" => Primitive::Point(Point::from_euclidean(arr(&numbers(kind, body, 3)?))),
        "line" => {
            let v = numbers(kind, body, 6)?;
            Primitive::Line(Line::from_point_direction(arr(&v), arr(&v[3..])).map_err(geo)?)
        }
        "plane" => {
            let v = numbers(kind, body, 4)?;
            Primitive::Plane(DualPlane::new(arr(&v), v[3]).map_err(geo)?.dual())
        }
        "sphere" => {
            let v = numbers(kind, body, 4)?;
            Primitive::Sphere(DualSphere::new(arr(&v), v[3]).map_err(geo)?.dual())
        }
        "circle" => {
            let v = numbers(kind, body, 7)?;
            let (c, r) = (arr(&v), v[6]);
            let (u, w) = plane_basis(arr(&v[3..]))?;
            let at = |a: [f64; 3], s: f64| Point::from_euclidean([0, 1, 2].map(|i| c[i] + s * r * a[i]));
            Primitive::Circle(Circle::from_points(&at(u, 1.0), &at(w, 1.0), &at(u, -1.0)).map_err(geo)?)
        }
        "pointpair" => {
            let v = numbers(kind, body, 6)?;
            let (a, b) = (Point::from_euclidean(arr(&v)), Point::from_euclidean(arr(&v[3..])));
            Primitive::PointPair(PointPair::from_points(&a, &b).map_err(geo)?)
        }
        other => return Err(format!("unknown target kind `{other}` ({TARGET_HELP})")),
    };
    Ok(Target::Primitive(prim))
}
