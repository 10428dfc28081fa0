//! The 32-blade conformal geometric algebra of 3D space.
//!
//! [`Multivector`] is the general sparse element; its products only evaluate
//! blades that the Cayley tables predict can be non-zero. Types implementing
//! [`Subspace`] carry their blade set statically and are used for geometric
//! primitives and versors.

pub mod blade;
pub mod cayley;
mod multivector;
mod plan;
#[doc(hidden)]
pub mod subspace;

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, SubAssign};

use num_traits::Float;
use thiserror::Error;

pub use blade::{blade_name, blades, grade, parse_blade_name, BladeSet};
pub use cayley::{generate_cayley_tables, tables, CayleyTable, CayleyTables, Product, Term};
pub use multivector::{Multivector, EPS_COMPARE, EPS_INVERSE};
pub use plan::result_blades;
pub use subspace::{product_into, Subspace};

/// Real coefficient type of a multivector.
pub trait Scalar:
    Float + Default + Debug + Display + Sum + AddAssign + SubAssign + Send + Sync + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("multivector is not invertible")]
    NotInvertible,
    #[error("grade {0} is outside 0..=5")]
    InvalidGrade(u32),
    #[error("expected {expected} coefficients, found {found}")]
    LengthMismatch { expected: usize, found: usize },
}
