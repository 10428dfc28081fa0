//! Fixed-layout multivectors whose blade set is part of the type.

use arrayvec::ArrayVec;

use super::blade::{BladeSet, BLADE_COUNT};
use super::cayley::Product;
use super::multivector::Multivector;

/// A multivector type with a statically known blade set.
///
/// Implementors store exactly `BLADES.len()` coefficients in ascending blade
/// order, so memory use follows the subspace rather than the full algebra.
pub trait Subspace: Sized + Clone {
    const BLADES: BladeSet;

    fn coeffs(&self) -> &[f64];

    /// Builds from raw coefficients in ascending blade order. Performs no
    /// validation beyond the length, which must equal `BLADES.len()`.
    fn from_coeffs(coeffs: &[f64]) -> Self;

    fn to_multivector(&self) -> Multivector {
        Multivector::new(Self::BLADES, self.coeffs()).expect("layout matches blade set")
    }

    /// Reads the coefficients on `BLADES`; anything outside is discarded.
    fn from_multivector(mv: &Multivector) -> Self {
        Self::from_coeffs(mv.restrict(Self::BLADES).coeffs())
    }

    fn get(&self, blade: u8) -> f64 {
        Self::BLADES.position(blade).map_or(0.0, |i| self.coeffs()[i])
    }

    fn scale(&self, s: f64) -> Self {
        let c: ArrayVec<f64, BLADE_COUNT> = self.coeffs().iter().map(|c| c * s).collect();
        Self::from_coeffs(&c)
    }

    /// Euclidean norm of the coefficient vector.
    fn coeff_norm(&self) -> f64 {
        self.coeffs().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.coeffs().iter().zip(other.coeffs()).all(|(a, b)| (a - b).abs() <= tol)
    }
}

/// Evaluates `a (op) b` only on the blades of `Out`.
pub fn product_into<A: Subspace, B: Subspace, Out: Subspace>(
    product: Product,
    a: &A,
    b: &B,
) -> Out {
    let r = a
        .to_multivector()
        .product_restricted(product, &b.to_multivector(), Out::BLADES);
    Out::from_multivector(&r)
}

pub const fn is_strictly_ascending(blades: &[u8]) -> bool {
    let mut i = 1;
    while i < blades.len() {
        if blades[i] <= blades[i - 1] {
            return false;
        }
        i += 1;
    }
    true
}

/// Declares a `Copy` struct implementing [`Subspace`] over the listed blades,
/// which must be given in ascending order.
#[macro_export]
macro_rules! subspace_type {
    (@count) => { 0usize };
    (@count $head:expr $(, $tail:expr)*) => { 1usize + $crate::subspace_type!(@count $($tail),*) };
    ($(#[$meta:meta])* $vis:vis struct $name:ident [$($blade:expr),+ $(,)?]) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq)]
        $vis struct $name {
            coeffs: [f64; $crate::subspace_type!(@count $($blade),+)],
        }

        const _: () = assert!(
            $crate::algebra::subspace::is_strictly_ascending(&[$($blade),+]),
            "blades must be listed in ascending order"
        );

        impl $crate::algebra::Subspace for $name {
            const BLADES: $crate::algebra::BladeSet =
                $crate::algebra::BladeSet::from_blades(&[$($blade),+]);

            #[inline]
            fn coeffs(&self) -> &[f64] {
                &self.coeffs
            }

            fn from_coeffs(coeffs: &[f64]) -> Self {
                let mut c = [0.0; $crate::subspace_type!(@count $($blade),+)];
                c.copy_from_slice(coeffs);
                $name { coeffs: c }
            }
        }

        impl ::std::fmt::Debug for $name {
            fn fmt(&self, f: &mut ::std::fmt::Formatter<'_>) -> ::std::fmt::Result {
                write!(
                    f,
                    "{}({})",
                    stringify!($name),
                    $crate::algebra::Subspace::to_multivector(self)
                )
            }
        }

        impl From<$name> for $crate::algebra::Multivector {
            fn from(v: $name) -> Self {
                $crate::algebra::Subspace::to_multivector(&v)
            }
        }

        impl From<&$name> for $crate::algebra::Multivector {
            fn from(v: &$name) -> Self {
                $crate::algebra::Subspace::to_multivector(v)
            }
        }
    };
}
