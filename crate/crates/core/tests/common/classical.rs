//! Textbook serial-chain kinematics and dynamics on 4x4 transforms and
//! 3-vectors, used as an independent reference.

use cga_robotics::robot::{Joint, JointKind, Link, Manipulator, SystemBuilder};
use cga_robotics::versors::Motor;
use nalgebra::{Isometry3, Matrix3, Matrix4, Rotation3, Translation3, UnitQuaternion, Vector3};
use rand::Rng;

#[derive(Debug, Clone)]
pub struct Element {
    pub xyz: [f64; 3],
    pub rpy: [f64; 3],
    pub kind: JointKind,
    pub axis: Vector3<f64>,
    pub mass: f64,
    pub com: Vector3<f64>,
    pub inertia: Matrix3<f64>,
}

#[derive(Debug, Clone)]
pub struct Chain {
    pub base_xyz: [f64; 3],
    pub base_rpy: [f64; 3],
    pub elements: Vec<Element>,
}

fn iso(xyz: [f64; 3], rpy: [f64; 3]) -> Isometry3<f64> {
    Isometry3::from_parts(
        Translation3::new(xyz[0], xyz[1], xyz[2]),
        UnitQuaternion::from_euler_angles(rpy[0], rpy[1], rpy[2]),
    )
}

fn unit<R: Rng>(rng: &mut R) -> Vector3<f64> {
    loop {
        let v = Vector3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if v.norm() > 0.2 {
            return v.normalize();
        }
    }
}

impl Chain {
    /// Random chain with `dof` actuated joints and occasional fixed joints.
    pub fn random<R: Rng>(rng: &mut R, dof: usize, with_prismatic: bool) -> Chain {
        let mut elements = Vec::new();
        let mut actuated = 0;
        while actuated < dof {
            let kind = if actuated > 0 && rng.gen_bool(0.15) {
                JointKind::Fixed
            } else if with_prismatic && rng.gen_bool(0.3) {
                JointKind::Prismatic
            } else {
                JointKind::Revolute
            };
            if kind != JointKind::Fixed {
                actuated += 1;
            }
            let a = Matrix3::from_fn(|_, _| rng.gen_range(-0.3..0.3));
            elements.push(Element {
                xyz: [0.0; 3].map(|_| rng.gen_range(-0.5..0.5)),
                rpy: [0.0; 3].map(|_| rng.gen_range(-3.0..3.0)),
                kind,
                axis: unit(rng),
                mass: rng.gen_range(0.5..3.0),
                com: Vector3::from_fn(|_, _| rng.gen_range(-0.3..0.3)),
                inertia: a * a.transpose() + Matrix3::identity() * 0.01,
            });
        }
        Chain {
            base_xyz: [0.0; 3].map(|_| rng.gen_range(-0.5..0.5)),
            base_rpy: [0.0; 3].map(|_| rng.gen_range(-1.0..1.0)),
            elements,
        }
    }

    pub fn dof(&self) -> usize {
        self.elements.iter().filter(|e| e.kind != JointKind::Fixed).count()
    }

    pub fn manipulator(&self) -> Manipulator {
        let mut b = SystemBuilder::new();
        b.add_link(Link::massless("l0"));
        for (i, e) in self.elements.iter().enumerate() {
            b.add_link(Link::new(format!("l{}", i + 1), e.mass, e.com.into(), e.inertia));
            b.add_joint(Joint::new(
                format!("j{}", i + 1),
                e.kind,
                format!("l{i}"),
                format!("l{}", i + 1),
                Motor::from_xyz_rpy(e.xyz, e.rpy),
                e.axis.into(),
            ));
        }
        b.set_base_motor(Motor::from_xyz_rpy(self.base_xyz, self.base_rpy));
        let name = format!("j{}", self.elements.len());
        Manipulator::new(b.finalize().unwrap(), &name).unwrap()
    }

    /// Per-element joint values, zero on fixed joints.
    fn spread(&self, v: &[f64]) -> Vec<f64> {
        let mut it = v.iter();
        self.elements
            .iter()
            .map(|e| if e.kind == JointKind::Fixed { 0.0 } else { *it.next().unwrap() })
            .collect()
    }

    /// Transform from element `i`'s parent frame to its own frame.
    fn local(&self, i: usize, q: f64) -> Isometry3<f64> {
        let e = &self.elements[i];
        let motion = match e.kind {
            JointKind::Fixed => Isometry3::identity(),
            JointKind::Revolute => Isometry3::from_parts(
                Translation3::identity(),
                UnitQuaternion::from_axis_angle(&nalgebra::Unit::new_normalize(e.axis), q),
            ),
            JointKind::Prismatic => Isometry3::from_parts(
                Translation3::from(e.axis * q),
                UnitQuaternion::identity(),
            ),
        };
        iso(e.xyz, e.rpy) * motion
    }

    fn base(&self) -> Isometry3<f64> {
        iso(self.base_xyz, self.base_rpy)
    }

    /// Product of exponentials on homogeneous matrices.
    pub fn fk(&self, q: &[f64]) -> Matrix4<f64> {
        let qs = self.spread(q);
        let mut t = self.base();
        for (i, &qi) in qs.iter().enumerate() {
            t *= self.local(i, qi);
        }
        t.to_homogeneous()
    }

    /// World-frame twists `(w, v)` of each actuated joint, with `v` the
    /// velocity of the point at the world origin.
    pub fn jacobian(&self, q: &[f64]) -> Vec<[f64; 6]> {
        let qs = self.spread(q);
        let mut t = self.base();
        let mut cols = Vec::new();
        for (i, &qi) in qs.iter().enumerate() {
            t *= self.local(i, qi);
            let e = &self.elements[i];
            let a = t.rotation * e.axis;
            let p = t.translation.vector;
            let (w, v) = match e.kind {
                JointKind::Fixed => continue,
                JointKind::Revolute => (a, -a.cross(&p)),
                JointKind::Prismatic => (Vector3::zeros(), a),
            };
            cols.push([w.x, w.y, w.z, v.x, v.y, v.z]);
        }
        cols
    }

    /// Newton-Euler with quantities in each link's own frame.
    pub fn rnea(&self, q: &[f64], qd: &[f64], qdd: &[f64], g: [f64; 3]) -> Vec<f64> {
        let (qs, qds, qdds) = (self.spread(q), self.spread(qd), self.spread(qdd));
        let n = self.elements.len();
        let mut w = Vector3::zeros();
        let mut wd = Vector3::zeros();
        let base_r = Rotation3::from(self.base().rotation);
        let mut vd = base_r.inverse() * -Vector3::from(g);
        let mut forces = Vec::with_capacity(n);
        let mut torques = Vec::with_capacity(n);
        let mut locals = Vec::with_capacity(n);
        for i in 0..n {
            let e = &self.elements[i];
            let t = self.local(i, qs[i]);
            let rt = t.rotation.inverse();
            let p = t.translation.vector;
            let a = e.axis;
            let w_prev = w;
            let lin = rt * (wd.cross(&p) + w_prev.cross(&w_prev.cross(&p)) + vd);
            match e.kind {
                JointKind::Revolute => {
                    w = rt * w_prev + a * qds[i];
                    wd = rt * wd + (rt * w_prev).cross(&(a * qds[i])) + a * qdds[i];
                    vd = lin;
                }
                JointKind::Prismatic => {
                    w = rt * w_prev;
                    wd = rt * wd;
                    vd = lin + w.cross(&(a * qds[i])) * 2.0 + a * qdds[i];
                }
                JointKind::Fixed => {
                    w = rt * w_prev;
                    wd = rt * wd;
                    vd = lin;
                }
            }
            let vc = wd.cross(&e.com) + w.cross(&w.cross(&e.com)) + vd;
            forces.push(vc * e.mass);
            torques.push(e.inertia * wd + w.cross(&(e.inertia * w)));
            locals.push(t);
        }
        let mut f = Vector3::zeros();
        let mut nm = Vector3::zeros();
        let mut tau = vec![0.0; n];
        for i in (0..n).rev() {
            let e = &self.elements[i];
            let (f_next, n_next) = if i + 1 < n {
                let t = &locals[i + 1];
                let fr = t.rotation * f;
                (fr, t.rotation * nm + t.translation.vector.cross(&fr))
            } else {
                (Vector3::zeros(), Vector3::zeros())
            };
            f = forces[i] + f_next;
            nm = torques[i] + n_next + e.com.cross(&forces[i]);
            tau[i] = match e.kind {
                JointKind::Revolute => nm.dot(&e.axis),
                JointKind::Prismatic => f.dot(&e.axis),
                JointKind::Fixed => 0.0,
            };
        }
        self.elements
            .iter()
            .zip(tau)
            .filter(|(e, _)| e.kind != JointKind::Fixed)
            .map(|(_, t)| t)
            .collect()
    }

    /// Joint accelerations from the reference dynamics, by solving
    /// `M qdd = tau - h` with a dense LU.
    pub fn forward(&self, q: &[f64], qd: &[f64], tau: &[f64], g: [f64; 3]) -> Vec<f64> {
        let n = self.dof();
        let zero = vec![0.0; n];
        let h = self.rnea(q, qd, &zero, g);
        let m = nalgebra::DMatrix::from_fn(n, n, |i, j| {
            let mut e = zero.clone();
            e[j] = 1.0;
            self.rnea(q, &zero, &e, [0.0; 3])[i]
        });
        let rhs = nalgebra::DVector::from_fn(n, |i, _| tau[i] - h[i]);
        m.lu().solve(&rhs).unwrap().iter().copied().collect()
    }
}
