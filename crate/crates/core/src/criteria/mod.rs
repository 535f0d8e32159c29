//! Non-parametricity criteria, their hypotheses, and the packaged case
//! studies built from them.

mod cases;
mod families;
mod groupcond;
mod hypotheses;
mod inertia;
mod verdict;

pub use cases::{
    atlas_data, co1_data, expected_kind, psl2_data, j2_data, parse_field, parse_small_group, run_case_study, th_and_baby,
    CaseReport, Certificate, CASE_IDS, CASE_MIN_WITNESSES, CASE_PRIME_BOUND,
};
pub use families::{eval_an_general, eval_sn_general};
pub use groupcond::{eval_cor61, eval_h2_and_fried};
pub use hypotheses::{
    eval_branch_point_hypothesis, eval_inertia_hypothesis, eval_ramification_variant, FusionMap,
};
pub use inertia::{eval_branch_point_criterion, eval_inertia_criterion};
pub use verdict::{Condition, CriterionReport, Verdict};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::extensions::ExtensionError;
use crate::groups::GroupError;
use crate::numbertheory::NumberTheoryError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriterionError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown case study {0:?}")]
    UnknownCase(String),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    NumberTheory(#[from] NumberTheoryError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
