//! Conformal geometric algebra for robotics.
//!
//! Modules, from the bottom up:
//!
//! * [`algebra`]: sparse multivectors over the 32 blades with table-driven products.
//! * [`primitives`]: points, spheres, planes, lines, circles and point pairs.
//! * [`versors`]: rotors, translators, motors and dilators with exp and log.
//! * [`robot`]: joint and link systems, serial manipulators, kinematics and dynamics.
//! * [`optim`]: motor and primitive-target costs with a Gauss-Newton solver.
//! * [`model_io`]: YAML robot descriptions and URDF conversion.
//!
//! Runnable walkthroughs live in `examples/`.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod model_io;
pub mod models;
pub mod optim;
pub mod primitives;
pub mod robot;
pub mod versors;

pub use algebra::{BladeSet, Multivector, Subspace};
pub use error::Error;
