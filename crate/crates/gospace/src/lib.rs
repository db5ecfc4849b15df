//! Exact models of homogeneous pseudo-riemannian spaces at the Lie-algebra
//! level, with decision and testing machinery for the geodesic-orbit
//! property, natural reductivity, invariant-operator commutativity, and
//! their behavior across complexification and real form families.
//!
//! All arithmetic is over the rationals or the Gaussian rationals; there is
//! no floating point anywhere in this crate.

pub mod family;
pub mod geodesic;
pub mod invariants;
pub mod linalg;
pub mod natred;
pub mod pbw;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod space;

#[cfg(test)]
pub(crate) mod fixtures;

pub use scalar::Scalar;
pub use space::{Field, ReductiveSpace, SpaceFile};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Scalar(#[from] scalar::ParseScalarError),
    #[error("{0}")]
    Input(String),
}

impl Error {
    pub fn input(message: String) -> Self {
        Error::Input(message)
    }
}
