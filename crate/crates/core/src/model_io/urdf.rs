use nalgebra::{Matrix3, Rotation3};
use roxmltree::{Document, Node};

use super::{ChainDoc, JointDoc, LinkDoc, ModelDocument, ModelError, Origin, FORMAT_VERSION};
use crate::robot::{JointKind, JointLimits};

fn malformed(msg: impl Into<String>) -> ModelError {
    ModelError::MalformedUrdf(msg.into())
}

fn child<'a>(node: Node<'a, 'a>, tag: &str) -> Option<Node<'a, 'a>> {
    node.children().find(|c| c.has_tag_name(tag))
}

fn attr<'a>(node: Node<'a, 'a>, name: &str, owner: &str) -> Result<&'a str, ModelError> {
    node.attribute(name)
        .ok_or_else(|| malformed(format!("`{owner}`: <{}> lacks `{name}`", node.tag_name().name())))
}

fn number(text: &str, owner: &str) -> Result<f64, ModelError> {
    text.trim().parse().map_err(|_| malformed(format!("`{owner}`: bad number `{text}`")))
}

fn triple(text: Option<&str>, default: [f64; 3], owner: &str) -> Result<[f64; 3], ModelError> {
    let Some(text) = text else { return Ok(default) };
    let parts: Vec<f64> = text.split_whitespace().map(|t| number(t, owner)).collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|_| malformed(format!("`{owner}`: expected three numbers in `{text}`")))
}

fn origin(node: Node, owner: &str) -> Result<Origin, ModelError> {
    match child(node, "origin") {
        None => Ok(Origin::default()),
        Some(o) => Ok(Origin {
            xyz: triple(o.attribute("xyz"), [0.0; 3], owner)?,
            rpy: triple(o.attribute("rpy"), [0.0; 3], owner)?,
        }),
    }
}

fn link(node: Node, warnings: &mut Vec<String>) -> Result<LinkDoc, ModelError> {
    let name = attr(node, "name", "link")?.to_owned();
    for tag in ["visual", "collision"] {
        if child(node, tag).is_some() {
            warnings.push(format!("link `{name}`: ignoring <{tag}>"));
        }
    }
    let Some(inertial) = child(node, "inertial") else {
        return Ok(LinkDoc { name, mass: 0.0, com: [0.0; 3], inertia: [0.0; 6] });
    };
    let o = origin(inertial, &name)?;
    let mass = match child(inertial, "mass") {
        Some(m) => number(attr(m, "value", &name)?, &name)?,
        None => 0.0,
    };
    let inertia = match child(inertial, "inertia") {
        None => [0.0; 6],
        Some(i) => {
            let g = |k: &str| -> Result<f64, ModelError> {
                i.attribute(k).map_or(Ok(0.0), |v| number(v, &name))
            };
            let m = Matrix3::new(
                g("ixx")?, g("ixy")?, g("ixz")?,
                g("ixy")?, g("iyy")?, g("iyz")?,
                g("ixz")?, g("iyz")?, g("izz")?,
            );
            // express the inertia in link axes
            let r = Rotation3::from_euler_angles(o.rpy[0], o.rpy[1], o.rpy[2]);
            let m = r.matrix() * m * r.matrix().transpose();
            [m[(0, 0)], m[(1, 1)], m[(2, 2)], m[(0, 1)], m[(0, 2)], m[(1, 2)]]
        }
    };
    Ok(LinkDoc { name, mass, com: o.xyz, inertia })
}

fn joint(node: Node) -> Result<JointDoc, ModelError> {
    let name = attr(node, "name", "joint")?.to_owned();
    let ty = attr(node, "type", &name)?;
    let kind = match ty {
        "fixed" => JointKind::Fixed,
        "revolute" | "continuous" => JointKind::Revolute,
        "prismatic" => JointKind::Prismatic,
        other => {
            return Err(ModelError::UnsupportedJointType { joint: name, kind: other.to_owned() });
        }
    };
    let link_ref = |tag: &str| -> Result<String, ModelError> {
        let n = child(node, tag).ok_or_else(|| malformed(format!("`{name}`: missing <{tag}>")))?;
        Ok(attr(n, "link", &name)?.to_owned())
    };
    let (parent, child_link) = (link_ref("parent")?, link_ref("child")?);
    let axis = match kind {
        JointKind::Fixed => None,
        _ => Some(triple(child(node, "axis").and_then(|a| a.attribute("xyz")), [1.0, 0.0, 0.0], &name)?),
    };
    let limits = match (ty, child(node, "limit")) {
        ("revolute" | "prismatic", Some(l)) => {
            let g = |k: &str| l.attribute(k).map_or(Ok(0.0), |v| number(v, &name));
            Some(JointLimits { lower: g("lower")?, upper: g("upper")?, velocity: g("velocity")?, effort: g("effort")? })
        }
        _ => None,
    };
    Ok(JointDoc { name: name.clone(), kind, parent, child: child_link, origin: origin(node, &name)?, axis, limits })
}

/// Converts URDF text to a model document, also returning notes about
/// ignored elements.
pub fn convert_urdf_with_warnings(text: &str) -> Result<(ModelDocument, Vec<String>), ModelError> {
    let xml = Document::parse(text).map_err(|e| malformed(e.to_string()))?;
    let robot = xml.root_element();
    if !robot.has_tag_name("robot") {
        return Err(malformed("root element is not <robot>"));
    }
    let mut warnings = Vec::new();
    let mut links = Vec::new();
    let mut joints = Vec::new();
    for node in robot.children().filter(|n| n.is_element()) {
        match node.tag_name().name() {
            "link" => links.push(link(node, &mut warnings)?),
            "joint" => joints.push(joint(node)?),
            other => warnings.push(format!("ignoring <{other}>")),
        }
    }
    let mut doc = ModelDocument {
        format: FORMAT_VERSION,
        name: robot.attribute("name").unwrap_or("robot").to_owned(),
        links,
        joints,
        chains: Vec::new(),
        end_effector_joint: None,
    };
    if let Some(tip) = doc.sole_tip().map(str::to_owned) {
        let path = path_to(&doc, &tip);
        doc.chains.push(ChainDoc { name: "main".into(), joints: path });
        doc.end_effector_joint = Some(tip);
    }
    Ok((doc, warnings))
}

pub fn convert_urdf(text: &str) -> Result<ModelDocument, ModelError> {
    convert_urdf_with_warnings(text).map(|(d, _)| d)
}

/// Joint names from the root to `tip`.
fn path_to(doc: &ModelDocument, tip: &str) -> Vec<String> {
    let mut path = Vec::new();
    let mut cur = doc.joints.iter().find(|j| j.name == tip);
    while let Some(j) = cur {
        if path.contains(&j.name) {
            break;
        }
        path.push(j.name.clone());
        cur = doc.joints.iter().find(|k| k.child == j.parent);
    }
    path.reverse();
    path
}
