use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::model_io::ModelError;
use crate::optim::OptimError;
use crate::primitives::GeometryError;
use crate::robot::RobotError;
use crate::versors::VersorError;

/// Any error raised by the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Versor(#[from] VersorError),
    #[error(transparent)]
    Robot(#[from] RobotError),
    #[error(transparent)]
    Optim(#[from] OptimError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
