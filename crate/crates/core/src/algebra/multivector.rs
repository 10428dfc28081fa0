use std::fmt;
use std::ops::{Add, BitOr, BitXor, Div, Mul, Neg, Sub};

use arrayvec::ArrayVec;

use super::blade::{blade_name, blades, grade, BladeSet, BLADE_COUNT};
use super::cayley::Product;
use super::plan::plan;
use super::{AlgebraError, Scalar};

/// Squared norm below which a versor is treated as non-invertible.
pub const EPS_INVERSE: f64 = 1e-12;

/// Default absolute tolerance for approximate comparisons.
pub const EPS_COMPARE: f64 = 1e-10;

/// Sparse element of the conformal algebra.
///
/// Stores one coefficient per blade of its [`BladeSet`], in ascending blade
/// index order. A blade outside the set has a coefficient of exactly zero.
#[derive(Clone, PartialEq)]
pub struct Multivector<T: Scalar = f64> {
    blades: BladeSet,
    coeffs: ArrayVec<T, BLADE_COUNT>,
}

impl<T: Scalar> Default for Multivector<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Multivector<T> {
    /// The empty multivector.
    pub fn zero() -> Self {
        Multivector { blades: BladeSet::EMPTY, coeffs: ArrayVec::new() }
    }

    /// All blades of `blades` present with zero coefficients.
    pub fn zeros(blades: BladeSet) -> Self {
        let mut coeffs = ArrayVec::new();
        for _ in 0..blades.len() {
            coeffs.push(T::zero());
        }
        Multivector { blades, coeffs }
    }

    pub fn scalar(s: T) -> Self {
        Self::blade(blades::SCALAR, s)
    }

    /// A single basis blade times `coeff`.
    pub fn blade(blade: u8, coeff: T) -> Self {
        let mut coeffs = ArrayVec::new();
        coeffs.push(coeff);
        Multivector { blades: BladeSet::single(blade), coeffs }
    }

    /// Builds from a blade set and its coefficients in ascending blade order.
    pub fn new(blades: BladeSet, coeffs: &[T]) -> Result<Self, AlgebraError> {
        if coeffs.len() != blades.len() {
            return Err(AlgebraError::LengthMismatch { expected: blades.len(), found: coeffs.len() });
        }
        Ok(Multivector { blades, coeffs: coeffs.iter().copied().collect() })
    }

    /// Builds from `(blade, coefficient)` pairs; repeated blades are summed.
    pub fn from_terms<I: IntoIterator<Item = (u8, T)>>(terms: I) -> Self {
        let mut dense = [T::zero(); BLADE_COUNT];
        let mut set = BladeSet::EMPTY;
        for (b, c) in terms {
            dense[b as usize] += c;
            set = set.union(BladeSet::single(b));
        }
        Self::from_dense_on(set, &dense)
    }

    /// Takes the coefficients of `set` from a dense 32-entry array.
    pub fn from_dense_on(set: BladeSet, dense: &[T; BLADE_COUNT]) -> Self {
        Multivector { blades: set, coeffs: set.iter().map(|b| dense[b as usize]).collect() }
    }

    /// Dense 32-entry coefficient array indexed by blade.
    pub fn to_dense(&self) -> [T; BLADE_COUNT] {
        let mut dense = [T::zero(); BLADE_COUNT];
        for (b, c) in self.iter() {
            dense[b as usize] = c;
        }
        dense
    }

    #[inline]
    pub fn blades(&self) -> BladeSet {
        self.blades
    }

    /// Coefficients in ascending blade order; the parameter vector of this
    /// multivector.
    #[inline]
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `blade`, zero when absent.
    #[inline]
    pub fn get(&self, blade: u8) -> T {
        match self.blades.position(blade) {
            Some(i) => self.coeffs[i],
            None => T::zero(),
        }
    }

    pub fn scalar_part(&self) -> T {
        self.get(blades::SCALAR)
    }

    /// `(blade, coefficient)` pairs in ascending blade order.
    pub fn iter(&self) -> impl Iterator<Item = (u8, T)> + '_ {
        self.blades.iter().zip(self.coeffs.iter().copied())
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> T {
        self.coeffs.iter().map(|c| *c * *c).sum::<T>().sqrt()
    }

    /// Re-expresses over `set`; coefficients of dropped blades are discarded.
    pub fn restrict(&self, set: BladeSet) -> Self {
        let mut coeffs = ArrayVec::new();
        for b in set.iter() {
            coeffs.push(self.get(b));
        }
        Multivector { blades: set, coeffs }
    }

    /// Drops blades whose coefficient magnitude is at most `tol`.
    pub fn prune(&self, tol: T) -> Self {
        Self::from_terms(self.iter().filter(|(_, c)| c.abs() > tol))
    }

    pub fn map<F: Fn(u8, T) -> T>(&self, f: F) -> Self {
        Multivector { blades: self.blades, coeffs: self.iter().map(|(b, c)| f(b, c)).collect() }
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|_, c| c * s)
    }

    fn zip_with<F: Fn(T, T) -> T>(&self, rhs: &Self, f: F) -> Self {
        let set = self.blades.union(rhs.blades);
        Multivector { blades: set, coeffs: set.iter().map(|b| f(self.get(b), rhs.get(b))).collect() }
    }

    /// Evaluates `self (op) rhs` on the predicted result blades intersected
    /// with `filter`. Blades outside `filter` are never computed.
    pub fn product_restricted(&self, product: Product, rhs: &Self, filter: BladeSet) -> Self {
        let p = plan(product, self.blades, rhs.blades, filter);
        let mut out = Self::zeros(p.out);
        for t in &p.terms {
            let v = self.coeffs[t.lhs as usize] * rhs.coeffs[t.rhs as usize];
            let slot = &mut out.coeffs[t.out as usize];
            if t.negate {
                *slot -= v;
            } else {
                *slot += v;
            }
        }
        out
    }

    pub fn product(&self, product: Product, rhs: &Self) -> Self {
        self.product_restricted(product, rhs, BladeSet::FULL)
    }

    pub fn geometric(&self, rhs: &Self) -> Self {
        self.product(Product::Geometric, rhs)
    }

    pub fn outer(&self, rhs: &Self) -> Self {
        self.product(Product::Outer, rhs)
    }

    pub fn inner(&self, rhs: &Self) -> Self {
        self.product(Product::Inner, rhs)
    }

    /// Reverse: grade-k blades pick up `(-1)^(k(k-1)/2)`.
    pub fn reverse(&self) -> Self {
        self.map(|b, c| if (grade(b) / 2) % 2 == 1 { -c } else { c })
    }

    /// Grade involution: grade-k blades pick up `(-1)^k`.
    pub fn involute(&self) -> Self {
        self.map(|b, c| if grade(b) % 2 == 1 { -c } else { c })
    }

    /// Dual with respect to `I = e0 ^ e1 ^ e2 ^ e3 ^ einf`: `X I^-1`.
    ///
    /// `I^2 = -1`, so `I^-1 = -I` and applying the dual twice negates.
    pub fn dual(&self) -> Self {
        self.geometric(&Self::blade(blades::PSEUDOSCALAR, -T::one()))
    }

    /// Inverse of a versor or blade: `reverse(X) / (X reverse(X))`.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let rev = self.reverse();
        let sq = self.geometric(&rev);
        let s = sq.scalar_part();
        let eps = T::from(EPS_INVERSE).unwrap();
        let tol = T::from(EPS_COMPARE).unwrap() * T::one().max(s.abs());
        let non_scalar = sq.iter().any(|(b, c)| b != blades::SCALAR && c.abs() > tol);
        if non_scalar || s.abs() < eps {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(rev.scale(T::one() / s))
    }

    /// Scalar part of `self * reverse(rhs)`.
    pub fn scalar_product(&self, rhs: &Self) -> T {
        self.product_restricted(Product::Geometric, &rhs.reverse(), BladeSet::single(blades::SCALAR))
            .scalar_part()
    }

    /// `sqrt(|<X reverse(X)>_0|)`.
    pub fn norm(&self) -> T {
        self.scalar_product(self).abs().sqrt()
    }

    /// Keeps the grade-`k` blades; `k` must lie in `0..=5`.
    pub fn grade_project(&self, k: u32) -> Result<Self, AlgebraError> {
        if k > 5 {
            return Err(AlgebraError::InvalidGrade(k));
        }
        Ok(self.restrict(self.blades.grade_part(k)))
    }

    /// Absolute comparison treating absent blades as zero.
    pub fn approx_eq(&self, rhs: &Self, tol: T) -> bool {
        self.blades
            .union(rhs.blades)
            .iter()
            .all(|b| (self.get(b) - rhs.get(b)).abs() <= tol)
    }

    /// Converts the coefficient type.
    pub fn cast<U: Scalar>(&self) -> Multivector<U> {
        Multivector {
            blades: self.blades,
            coeffs: self.coeffs.iter().map(|c| U::from(*c).unwrap()).collect(),
        }
    }
}

impl<T: Scalar> fmt::Debug for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Scalar> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blades.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if b == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{}", blade_name(b))?;
            }
        }
        Ok(())
    }
}

macro_rules! binary_ops {
    ($($trait:ident, $method:ident, $body:expr;)*) => {$(
        impl<T: Scalar> $trait<&Multivector<T>> for &Multivector<T> {
            type Output = Multivector<T>;
            fn $method(self, rhs: &Multivector<T>) -> Multivector<T> {
                let f: fn(&Multivector<T>, &Multivector<T>) -> Multivector<T> = $body;
                f(self, rhs)
            }
        }
        impl<T: Scalar> $trait<Multivector<T>> for Multivector<T> {
            type Output = Multivector<T>;
            fn $method(self, rhs: Multivector<T>) -> Multivector<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Scalar> $trait<&Multivector<T>> for Multivector<T> {
            type Output = Multivector<T>;
            fn $method(self, rhs: &Multivector<T>) -> Multivector<T> {
                (&self).$method(rhs)
            }
        }
        impl<T: Scalar> $trait<Multivector<T>> for &Multivector<T> {
            type Output = Multivector<T>;
            fn $method(self, rhs: Multivector<T>) -> Multivector<T> {
                self.$method(&rhs)
            }
        }
    )*};
}

binary_ops! {
    Add, add, |a, b| a.zip_with(b, |x, y| x + y);
    Sub, sub, |a, b| a.zip_with(b, |x, y| x - y);
    Mul, mul, |a, b| a.geometric(b);
    BitXor, bitxor, |a, b| a.outer(b);
    BitOr, bitor, |a, b| a.inner(b);
}

impl<T: Scalar> Neg for Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Self {
        self.map(|_, c| -c)
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        self.map(|_, c| -c)
    }
}

macro_rules! scalar_ops {
    ($($t:ty),*) => {$(
        impl Mul<$t> for Multivector<$t> {
            type Output = Multivector<$t>;
            fn mul(self, s: $t) -> Self { self.scale(s) }
        }
        impl Mul<$t> for &Multivector<$t> {
            type Output = Multivector<$t>;
            fn mul(self, s: $t) -> Multivector<$t> { self.scale(s) }
        }
        impl Mul<Multivector<$t>> for $t {
            type Output = Multivector<$t>;
            fn mul(self, m: Multivector<$t>) -> Multivector<$t> { m.scale(self) }
        }
        impl Mul<&Multivector<$t>> for $t {
            type Output = Multivector<$t>;
            fn mul(self, m: &Multivector<$t>) -> Multivector<$t> { m.scale(self) }
        }
        impl Div<$t> for Multivector<$t> {
            type Output = Multivector<$t>;
            fn div(self, s: $t) -> Self { self.scale(1.0 / s) }
        }
        impl Div<$t> for &Multivector<$t> {
            type Output = Multivector<$t>;
            fn div(self, s: $t) -> Multivector<$t> { self.scale(1.0 / s) }
        }
    )*};
}

scalar_ops!(f32, f64);
