use std::collections::{HashMap, HashSet};

use super::{Joint, Link, RobotError};
use crate::versors::Motor;

/// Ordered joints from base to tip, as indices into [`System::joints`].
#[derive(Debug, Clone, PartialEq)]
pub struct KinematicChain {
    pub name: String,
    joints: Vec<usize>,
    actuated: Vec<usize>,
}

impl KinematicChain {
    /// All joints, fixed ones included.
    pub fn joints(&self) -> &[usize] {
        &self.joints
    }

    /// Positions within [`KinematicChain::joints`] of the actuated joints.
    pub fn actuated(&self) -> &[usize] {
        &self.actuated
    }

    pub fn dof(&self) -> usize {
        self.actuated.len()
    }
}

/// Collects links, joints and chains; nothing is checked until
/// [`SystemBuilder::finalize`].
#[derive(Debug, Clone, Default)]
pub struct SystemBuilder {
    links: Vec<Link>,
    joints: Vec<Joint>,
    chains: Vec<(String, Vec<String>)>,
    base_motor: Option<Motor>,
}

impl SystemBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_link(&mut self, link: Link) -> &mut Self {
        self.links.push(link);
        self
    }

    pub fn add_joint(&mut self, joint: Joint) -> &mut Self {
        self.joints.push(joint);
        self
    }

    /// Registers a named chain; joints are listed base to tip.
    pub fn add_kinematic_chain<S: AsRef<str>>(&mut self, name: impl Into<String>, joints: &[S]) -> &mut Self {
        self.chains.push((name.into(), joints.iter().map(|s| s.as_ref().to_owned()).collect()));
        self
    }

    /// Pose of the base link in the world; identity by default.
    pub fn set_base_motor(&mut self, motor: Motor) -> &mut Self {
        self.base_motor = Some(motor);
        self
    }

    pub fn finalize(self) -> Result<System, RobotError> {
        let SystemBuilder { links, mut joints, chains, base_motor } = self;
        if links.is_empty() {
            return Err(RobotError::Empty);
        }

        let link_index = index_names(links.iter().map(|l| l.name.as_str()))?;
        let joint_index = index_names(joints.iter().map(|j| j.name.as_str()))?;
        index_names(chains.iter().map(|(n, _)| n.as_str()))?;

        for link in &links {
            link.validate()?;
        }
        for joint in &mut joints {
            joint.validate()?;
            for r in [&joint.parent, &joint.child] {
                if !link_index.contains_key(r) {
                    return Err(RobotError::DanglingReference {
                        entity: joint.name.clone(),
                        reference: r.clone(),
                    });
                }
            }
        }

        let mut parent_joint: Vec<Option<usize>> = vec![None; links.len()];
        for (ji, joint) in joints.iter().enumerate() {
            let child = link_index[&joint.child];
            if parent_joint[child].is_some() || joint.parent == joint.child {
                return Err(RobotError::CycleDetected(joint.child.clone()));
            }
            parent_joint[child] = Some(ji);
        }

        // every link must reach a root by following parent joints
        for (start, link) in links.iter().enumerate() {
            let mut seen = HashSet::new();
            let mut cur = start;
            while let Some(j) = parent_joint[cur] {
                if !seen.insert(cur) {
                    return Err(RobotError::CycleDetected(link.name.clone()));
                }
                cur = link_index[&joints[j].parent];
            }
        }

        let roots: Vec<usize> = (0..links.len()).filter(|&l| parent_joint[l].is_none()).collect();
        if roots.len() != 1 {
            return Err(RobotError::MultipleRoots(
                roots.iter().map(|&l| links[l].name.clone()).collect(),
            ));
        }

        let mut system = System {
            links,
            joints,
            link_index,
            joint_index,
            parent_joint,
            base_link: roots[0],
            base_motor: base_motor.unwrap_or_else(Motor::identity),
            chains: HashMap::new(),
        };
        for (name, joint_names) in chains {
            let chain = system.build_chain(&name, &joint_names)?;
            system.chains.insert(name, chain);
        }
        Ok(system)
    }
}

fn index_names<'a>(names: impl Iterator<Item = &'a str>) -> Result<HashMap<String, usize>, RobotError> {
    let mut map = HashMap::new();
    for (i, n) in names.enumerate() {
        if map.insert(n.to_owned(), i).is_some() {
            return Err(RobotError::DuplicateName(n.to_owned()));
        }
    }
    Ok(map)
}

/// A validated tree of links connected by joints.
#[derive(Debug, Clone)]
pub struct System {
    links: Vec<Link>,
    joints: Vec<Joint>,
    link_index: HashMap<String, usize>,
    joint_index: HashMap<String, usize>,
    parent_joint: Vec<Option<usize>>,
    base_link: usize,
    base_motor: Motor,
    chains: HashMap<String, KinematicChain>,
}

impl System {
    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn joints(&self) -> &[Joint] {
        &self.joints
    }

    pub fn link(&self, name: &str) -> Option<&Link> {
        self.link_index.get(name).map(|&i| &self.links[i])
    }

    pub fn joint(&self, name: &str) -> Option<&Joint> {
        self.joint_index.get(name).map(|&i| &self.joints[i])
    }

    pub(crate) fn link_id(&self, name: &str) -> usize {
        self.link_index[name]
    }

    pub fn base_link(&self) -> &Link {
        &self.links[self.base_link]
    }

    pub fn base_motor(&self) -> Motor {
        self.base_motor
    }

    /// The same system placed at `motor` in the world.
    pub fn with_base_motor(mut self, motor: Motor) -> Self {
        self.base_motor = motor;
        self
    }

    pub fn chain(&self, name: &str) -> Option<&KinematicChain> {
        self.chains.get(name)
    }

    pub fn chain_names(&self) -> impl Iterator<Item = &str> {
        self.chains.keys().map(String::as_str)
    }

    fn build_chain(&self, name: &str, joint_names: &[String]) -> Result<KinematicChain, RobotError> {
        let mut joints = Vec::with_capacity(joint_names.len());
        for j in joint_names {
            let &ji = self.joint_index.get(j).ok_or_else(|| RobotError::DanglingReference {
                entity: name.to_owned(),
                reference: j.clone(),
            })?;
            joints.push(ji);
        }
        if joints.is_empty() || self.joints[joints[0]].parent != self.links[self.base_link].name {
            return Err(RobotError::NonSerialChain(name.to_owned()));
        }
        for w in joints.windows(2) {
            if self.joints[w[0]].child != self.joints[w[1]].parent {
                return Err(RobotError::NonSerialChain(name.to_owned()));
            }
        }
        let actuated: Vec<usize> = joints
            .iter()
            .enumerate()
            .filter(|(_, &j)| self.joints[j].is_actuated())
            .map(|(i, _)| i)
            .collect();
        if actuated.is_empty() {
            return Err(RobotError::NoActuatedJoints(name.to_owned()));
        }
        Ok(KinematicChain { name: name.to_owned(), joints, actuated })
    }

    /// Chain from the base link to (and including) `joint`.
    pub fn chain_to_joint(&self, joint: &str) -> Result<KinematicChain, RobotError> {
        let &tip = self.joint_index.get(joint).ok_or_else(|| RobotError::NoSuchJoint(joint.to_owned()))?;
        let mut names = vec![self.joints[tip].name.clone()];
        let mut link = self.link_index[&self.joints[tip].parent];
        while let Some(j) = self.parent_joint[link] {
            names.push(self.joints[j].name.clone());
            link = self.link_index[&self.joints[j].parent];
        }
        names.reverse();
        self.build_chain(joint, &names)
    }
}
