//! Exact arithmetic over Q and over prime fields.

mod bipoly;
mod modp;
mod poly;
mod primes;
mod rational;
mod ring;
mod roots;
mod sturm;

pub use bipoly::{critical_values_poly, BiPoly};
pub use modp::{factor_degree_pattern_mod_p, roots_mod_p, PrimeFieldPoly};
pub use poly::{cyclotomic, cyclotomic_index, RatPoly, MAX_POLY_DEGREE};
pub use primes::{factor_bigint, factor_u64, is_prime_u64, jacobi, jacobi_big, is_probable_prime_big, primes_up_to, Primes};
pub use rational::{
    exact_sqrt, format_rational, int, is_square_rational, lcm_of_denominators, parse_rational,
    ratio, rational_sqrt, Rational, MAX_RATIONAL_LEN,
};
pub use ring::{discriminant, resultant, ExactRing};
pub use roots::{
    factor_small, irreducibility, is_square_poly, quadratic_pair_split, rational_roots,
    Irreducibility,
};
pub use sturm::sturm_real_root_count;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("prime {0} is excluded for this polynomial")]
    Excluded(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
}
