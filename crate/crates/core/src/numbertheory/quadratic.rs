//! Squarefree kernels and quadratic residue symbols.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::NumberTheoryError;
use crate::algebra::{factor_bigint, jacobi_big, Rational};

/// A nonzero squarefree integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquarefreeInt(BigInt);

impl SquarefreeInt {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl fmt::Display for SquarefreeInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for SquarefreeInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.to_string().serialize(s)
    }
}

/// The squarefree `d` with `n / d` a square.
pub fn squarefree_kernel(n: &BigInt) -> Result<SquarefreeInt, NumberTheoryError> {
    if n.is_zero() {
        return Err(NumberTheoryError::Domain("squarefree kernel of 0".into()));
    }
    let mut d: BigInt = factor_bigint(n)
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .product();
    if n.is_negative() {
        d = -d;
    }
    Ok(SquarefreeInt(d))
}

/// Kernel of a nonzero rational `p/q`, i.e. of `p * q`.
pub fn squarefree_kernel_rational(q: &Rational) -> Result<SquarefreeInt, NumberTheoryError> {
    squarefree_kernel(&(q.numer() * q.denom()))
}

/// Whether `Q(sqrt d1) = Q(sqrt d2)`.
pub fn same_quadratic_field(d1: &Rational, d2: &Rational) -> Result<bool, NumberTheoryError> {
    Ok(squarefree_kernel_rational(d1)? == squarefree_kernel_rational(d2)?)
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre_symbol(a: &BigInt, p: u64) -> i8 {
    jacobi_big(a, p)
}

/// `(a/p)` from Euler's criterion `a^((p-1)/2) mod p`, independent of the
/// reciprocity-based computation.
pub fn euler_criterion(a: &BigInt, p: u64) -> i8 {
    let bp = BigInt::from(p);
    let r = a.modpow(&BigInt::from((p - 1) / 2), &bp);
    let r = ((r % &bp) + &bp) % &bp;
    if r.is_zero() {
        0
    } else if r.is_one() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn k(n: i64) -> i64 {
        squarefree_kernel(&BigInt::from(n)).unwrap().value().try_into().unwrap()
    }

    #[test]
    fn kernels() {
        assert_eq!(k(12), 3);
        assert_eq!(k(-50), -2);
        assert_eq!(k(1), 1);
        assert_eq!(k(-1), -1);
        assert!(squarefree_kernel(&BigInt::zero()).is_err());
    }

    #[test]
    fn fields() {
        assert!(same_quadratic_field(&ratio(2, 1), &ratio(8, 1)).unwrap());
        assert!(!same_quadratic_field(&ratio(2, 1), &ratio(3, 1)).unwrap());
        assert!(same_quadratic_field(&ratio(1, 2), &ratio(2, 1)).unwrap());
        assert!(same_quadratic_field(&ratio(4, 9), &ratio(1, 1)).unwrap());
    }

    #[test]
    fn symbols_agree() {
        for p in [3u64, 5, 7, 11, 13, 101] {
            for a in -30i64..30 {
                let a = BigInt::from(a);
                assert_eq!(legendre_symbol(&a, p), euler_criterion(&a, p));
            }
        }
    }
}
