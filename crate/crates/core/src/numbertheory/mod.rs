//! Prime divisors of polynomials, quadratic fields, ternary quadratic forms
//! and conics over Q.

mod conic;
mod divisors;
mod prop31;
mod prop32;
mod quadratic;
mod ternary;

pub use conic::Conic;
pub use divisors::{
    is_prime_divisor, prime_divisor_census, Census, DivisorVerdict, PrimeDivisorReport,
};
pub use prop31::{
    prop31_is_parametric, prop31_obstruction_primes, prop31_specialization_point,
    ObstructionPrime,
};
pub use prop32::{
    certify_prop32_pair, prop32_forms, prop32_nonspecializable_pairs, Prop32Pair, Prop32Search,
};
pub use quadratic::{
    euler_criterion, legendre_symbol, same_quadratic_field, squarefree_kernel,
    squarefree_kernel_rational, SquarefreeInt,
};
pub use ternary::{
    brute_force_ternary, brute_force_ternary_box, holzer_bounds, holzer_refutes,
    legendre_decision, legendre_solvable, reduce_form, LegendreDecision, ReducedForm, TernaryForm,
};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberTheoryError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("the extension is not parametric: {0}")]
    NotParametric(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
