use nalgebra::{DMatrix, Matrix3, Matrix6, Vector3, Vector6};

use super::{Link, Manipulator, RobotError, EPS_PIVOT, GRAVITY};
use crate::algebra::Subspace;
use crate::versors::{Motor, MotorGenerator, Versor, Wrench};

/// Mass, center of mass and rotational inertia about the center of mass,
/// all in the body frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialInertia {
    pub mass: f64,
    pub center_of_mass: [f64; 3],
    pub inertia: Matrix3<f64>,
}

impl From<&Link> for SpatialInertia {
    fn from(l: &Link) -> Self {
        SpatialInertia { mass: l.mass, center_of_mass: l.center_of_mass, inertia: l.inertia }
    }
}

impl SpatialInertia {
    /// Momentum of a body moving with twist `v`, both in the body frame.
    pub fn apply(&self, v: &MotorGenerator) -> Wrench {
        let w = Vector3::from(v.rotation());
        let u = Vector3::from(v.translation());
        let c = Vector3::from(self.center_of_mass);
        let p = (u + w.cross(&c)) * self.mass;
        let l = self.inertia * w + c.cross(&p);
        Wrench::new(p.into(), l.into())
    }

    /// The same map after moving the body by `m`, expressed in the outer frame.
    pub fn apply_in(&self, m: &Motor, v: &MotorGenerator) -> Wrench {
        m.apply(&self.apply(&m.reverse().apply(v)))
    }

    /// Matrix of [`apply_in`](Self::apply_in) from `(w, u)` to `(f, n)`.
    pub fn matrix_in(&self, m: &Motor) -> Matrix6<f64> {
        let mut out = Matrix6::zeros();
        for k in 0..6 {
            let mut e = [0.0; 6];
            e[k] = 1.0;
            let col = self.apply_in(m, &MotorGenerator::from_array(e)).to_array();
            out.set_column(k, &Vector6::from(col));
        }
        out
    }
}

/// Swaps the two halves, turning the power pairing into a dot product.
fn swap(v: &Vector6<f64>) -> Vector6<f64> {
    Vector6::new(v[3], v[4], v[5], v[0], v[1], v[2])
}

fn gravity_twist(g: [f64; 3]) -> MotorGenerator {
    MotorGenerator::new([0.0; 3], g.map(|c| -c))
}

impl Manipulator {
    fn body_momentum(&self, i: usize, frames: &[Motor], v: &MotorGenerator) -> Wrench {
        self.bodies()[i]
            .iter()
            .fold(Wrench::zero(), |acc, (p, inertia)| acc.add(&inertia.apply_in(&frames[*p], v)))
    }

    fn body_matrix(&self, i: usize, frames: &[Motor]) -> Matrix6<f64> {
        self.bodies()[i]
            .iter()
            .map(|(p, inertia)| inertia.matrix_in(&frames[*p]))
            .sum()
    }

    /// Joint torques for the given motion under standard gravity.
    pub fn inverse_dynamics(&self, q: &[f64], qd: &[f64], qdd: &[f64]) -> Result<Vec<f64>, RobotError> {
        self.inverse_dynamics_with_gravity(q, qd, qdd, GRAVITY)
    }

    /// Recursive Newton-Euler with twists, accelerations and wrenches all
    /// kept in the world frame.
    pub fn inverse_dynamics_with_gravity(
        &self,
        q: &[f64],
        qd: &[f64],
        qdd: &[f64],
        gravity: [f64; 3],
    ) -> Result<Vec<f64>, RobotError> {
        self.check_len(qd)?;
        self.check_len(qdd)?;
        let frames = self.frames(q)?;
        let s = self.world_twists(&frames);
        let n = s.len();
        let mut v = MotorGenerator::zero();
        let mut a = gravity_twist(gravity);
        let mut f = Vec::with_capacity(n);
        for i in 0..n {
            v = v.add(&s[i].scale(qd[i]));
            a = a.add(&s[i].scale(qdd[i])).add(&v.bracket(&s[i]).scale(qd[i]));
            let h = self.body_momentum(i, &frames, &v);
            f.push(self.body_momentum(i, &frames, &a).add(&v.bracket(&h)));
        }
        let mut tau = vec![0.0; n];
        let mut acc = Wrench::zero();
        for i in (0..n).rev() {
            acc = acc.add(&f[i]);
            tau[i] = acc.power(&s[i]);
        }
        Ok(tau)
    }

    /// Joint-space mass matrix, one inverse-dynamics column per joint.
    pub fn mass_matrix(&self, q: &[f64]) -> Result<DMatrix<f64>, RobotError> {
        let n = self.dof();
        let zero = vec![0.0; n];
        let mut m = DMatrix::zeros(n, n);
        for j in 0..n {
            let mut e = zero.clone();
            e[j] = 1.0;
            let col = self.inverse_dynamics_with_gravity(q, &zero, &e, [0.0; 3])?;
            for i in 0..n {
                m[(i, j)] = col[i];
            }
        }
        Ok(m)
    }

    /// Joint accelerations for the given torques under standard gravity.
    pub fn forward_dynamics(&self, q: &[f64], qd: &[f64], tau: &[f64]) -> Result<Vec<f64>, RobotError> {
        self.forward_dynamics_with_gravity(q, qd, tau, GRAVITY)
    }

    /// Articulated-body algorithm in the world frame.
    pub fn forward_dynamics_with_gravity(
        &self,
        q: &[f64],
        qd: &[f64],
        tau: &[f64],
        gravity: [f64; 3],
    ) -> Result<Vec<f64>, RobotError> {
        self.check_len(qd)?;
        self.check_len(tau)?;
        let frames = self.frames(q)?;
        let twists = self.world_twists(&frames);
        let n = twists.len();
        let s: Vec<Vector6<f64>> = twists.iter().map(|t| Vector6::from(t.to_array())).collect();

        let mut ia = Vec::with_capacity(n);
        let mut pa = Vec::with_capacity(n);
        let mut c = Vec::with_capacity(n);
        let mut v = MotorGenerator::zero();
        for i in 0..n {
            v = v.add(&twists[i].scale(qd[i]));
            c.push(Vector6::from(v.bracket(&twists[i]).scale(qd[i]).to_array()));
            let h = self.body_momentum(i, &frames, &v);
            pa.push(Vector6::from(v.bracket(&h).to_array()));
            ia.push(self.body_matrix(i, &frames));
        }

        let mut u_vec = vec![Vector6::zeros(); n];
        let mut d = vec![0.0; n];
        let mut u = vec![0.0; n];
        for i in (0..n).rev() {
            let ps = swap(&s[i]);
            u_vec[i] = ia[i] * s[i];
            d[i] = ps.dot(&u_vec[i]);
            if d[i].abs() < EPS_PIVOT {
                let joint = self.joint_names()[i].to_owned();
                return Err(RobotError::SingularInertia { joint, pivot: d[i] });
            }
            u[i] = tau[i] - ps.dot(&pa[i]);
            if i > 0 {
                let row = ps.transpose() * ia[i];
                let ia_child = ia[i] - u_vec[i] * row / d[i];
                let pa_child = pa[i] + ia_child * c[i] + u_vec[i] * (u[i] / d[i]);
                ia[i - 1] += ia_child;
                pa[i - 1] += pa_child;
            }
        }

        let mut a = Vector6::from(gravity_twist(gravity).to_array());
        let mut qdd = vec![0.0; n];
        for i in 0..n {
            a += c[i];
            qdd[i] = (u[i] - swap(&u_vec[i]).dot(&a)) / d[i];
            a += s[i] * qdd[i];
        }
        Ok(qdd)
    }
}
