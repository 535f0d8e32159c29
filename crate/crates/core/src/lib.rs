//! Exact tools for deciding when a regular Galois extension of Q(T) fails to
//! be parametric: polynomial arithmetic, permutation groups, prime divisors,
//! ternary forms, extension descriptors and the criteria built on them.

pub mod algebra;
pub mod groups;
pub mod extensions;
pub mod numbertheory;
pub mod criteria;
pub mod fixtures;
