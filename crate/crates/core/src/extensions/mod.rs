//! Regular Galois extensions of Q(T) described by their group, branch
//! orbits and inertia classes, with builders and specialization.

pub mod builders;
mod descriptor;
mod field;
mod genus;
mod specialize;

pub use descriptor::{m_polys, BranchOrbit, ExtensionDescriptor, Locus, MAX_ORBITS, MAX_ORBIT_DEGREE};
pub use field::FieldKind;
pub use genus::{genus_lower_bound, riemann_hurwitz_bound, GenusBound};
pub use specialize::{
    small_galois_group, specialize, specialize_with, PatternCensus, SmallGaloisGroup,
    SpecializationResult, DEFAULT_CENSUS_BOUND,
};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::groups::GroupError;
use crate::numbertheory::NumberTheoryError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid descriptor: {0}")]
    Invalid(String),
    #[error("not a Morse polynomial: {0}")]
    NotMorse(String),
    #[error("bad specialization point: {0}")]
    NonSeparable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    NumberTheory(#[from] NumberTheoryError),
}
