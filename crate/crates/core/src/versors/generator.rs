use crate::algebra::blades::*;
use crate::algebra::Subspace;
use crate::subspace_type;

subspace_type! {
    /// Euclidean bivector generating a rotation.
    pub struct RotorGenerator [E12, E13, E23]
}

subspace_type! {
    /// Bivector generating a rigid motion (a twist).
    pub struct MotorGenerator [E12, E13, E23, E1INF, E2INF, E3INF]
}

subspace_type! {
    /// Force and moment as a bivector.
    ///
    /// The force occupies the rotational slots and the moment about the origin
    /// the translational ones. With that layout a wrench transforms under a
    /// motor sandwich exactly like a twist, and [`MotorGenerator::bracket`]
    /// acts on it as the dual cross product.
    pub struct Wrench [E12, E13, E23, E1INF, E2INF, E3INF]
}

fn rotation_slots(w: [f64; 3]) -> [f64; 3] {
    [w[2], -w[1], w[0]]
}

fn rotation_from_slots(c: &[f64]) -> [f64; 3] {
    [c[2], -c[1], c[0]]
}

impl RotorGenerator {
    /// Generator of a rotation by `|w|` about `w`.
    pub fn from_rotation_vector(w: [f64; 3]) -> Self {
        RotorGenerator { coeffs: rotation_slots(w) }
    }

    pub fn rotation_vector(&self) -> [f64; 3] {
        rotation_from_slots(&self.coeffs)
    }

    pub fn angle(&self) -> f64 {
        self.coeff_norm()
    }
}

impl MotorGenerator {
    /// Twist with angular part `w` and linear velocity `u` of the point at
    /// the origin.
    pub fn new(w: [f64; 3], u: [f64; 3]) -> Self {
        let r = rotation_slots(w);
        MotorGenerator { coeffs: [r[0], r[1], r[2], u[0], u[1], u[2]] }
    }

    pub fn zero() -> Self {
        MotorGenerator { coeffs: [0.0; 6] }
    }

    pub fn rotation(&self) -> [f64; 3] {
        rotation_from_slots(&self.coeffs[..3])
    }

    pub fn translation(&self) -> [f64; 3] {
        [self.coeffs[3], self.coeffs[4], self.coeffs[5]]
    }

    /// `(w, u)` as a 6-vector.
    pub fn to_array(&self) -> [f64; 6] {
        let w = self.rotation();
        let u = self.translation();
        [w[0], w[1], w[2], u[0], u[1], u[2]]
    }

    pub fn from_array(a: [f64; 6]) -> Self {
        Self::new([a[0], a[1], a[2]], [a[3], a[4], a[5]])
    }

    /// Lie bracket `-(AB - BA) / 2`, the spatial cross product of twists.
    pub fn bracket<X: Subspace>(&self, other: &X) -> X {
        let a = self.to_multivector();
        let b = other.to_multivector();
        X::from_multivector(&((&a * &b - &b * &a) * -0.5))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut c = self.coeffs;
        for (x, y) in c.iter_mut().zip(other.coeffs) {
            *x += y;
        }
        MotorGenerator { coeffs: c }
    }

    pub fn rotor_part(&self) -> RotorGenerator {
        RotorGenerator::from_coeffs(&self.coeffs[..3])
    }
}

impl From<RotorGenerator> for MotorGenerator {
    fn from(g: RotorGenerator) -> Self {
        MotorGenerator::from_multivector(&g.to_multivector())
    }
}

impl Wrench {
    pub fn new(force: [f64; 3], moment: [f64; 3]) -> Self {
        let f = rotation_slots(force);
        Wrench { coeffs: [f[0], f[1], f[2], moment[0], moment[1], moment[2]] }
    }

    pub fn zero() -> Self {
        Wrench { coeffs: [0.0; 6] }
    }

    pub fn force(&self) -> [f64; 3] {
        rotation_from_slots(&self.coeffs[..3])
    }

    /// Moment about the origin.
    pub fn moment(&self) -> [f64; 3] {
        [self.coeffs[3], self.coeffs[4], self.coeffs[5]]
    }

    /// `(force, moment)` as a 6-vector.
    pub fn to_array(&self) -> [f64; 6] {
        let f = self.force();
        let n = self.moment();
        [f[0], f[1], f[2], n[0], n[1], n[2]]
    }

    pub fn from_array(a: [f64; 6]) -> Self {
        Self::new([a[0], a[1], a[2]], [a[3], a[4], a[5]])
    }

    /// Power delivered along a twist: `f . u + n . w`.
    pub fn power(&self, twist: &MotorGenerator) -> f64 {
        let (f, n) = (self.force(), self.moment());
        let (w, u) = (twist.rotation(), twist.translation());
        (0..3).map(|i| f[i] * u[i] + n[i] * w[i]).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut c = self.coeffs;
        for (x, y) in c.iter_mut().zip(other.coeffs) {
            *x += y;
        }
        Wrench { coeffs: c }
    }
}
