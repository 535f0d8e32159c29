//! Permutation groups and conjugacy-class arithmetic.

mod alternating;
mod classes;
mod cycle_type;
mod group;
mod partitions;
mod perm;
mod psl2;
mod schreier;
mod search;
mod wire;

pub use alternating::{
    an_representative, conjugate_in_an, split_tag, MAX_AN_CONJUGACY_DEGREE,
};
pub use classes::{fuse, ClassLabel, Group};
pub use cycle_type::{CycleType, MAX_CYCLE_TYPE_LEN};
pub use group::{enumeration_cap, ConjugacyClass, PermGroup, DEFAULT_ENUMERATION_CAP};
pub use partitions::Partitions;
pub use perm::{Perm, MAX_PERM_DEGREE};
pub use psl2::psl2_group;
pub use search::{
    enumerate_subgroups, find_class_set_cor53, is_g_complete, is_g_complete_by_subgroups,
    is_rational_class_set, real_tuple_construction, verify_real_tuple, ClassSetWitness,
    GCompleteness, RealTuple, Subgroup, MAX_SUBGROUP_ENUMERATION_ORDER,
};
pub use wire::MAX_WIRE_GENERATORS;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { cap: usize, order: u128 },
    #[error("group has odd order, so it has no involution")]
    NoInvolution,
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// Only element orders are known for this class.
    #[error("order-only class data: {0}")]
    OrderOnly(String),
}
