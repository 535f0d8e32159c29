//! Quadratic extensions `Q(T)(sqrt(aT^2 + bT + c))`: parametric exactly when
//! `b^2 - 4ac` is a square.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{euler_criterion, legendre_symbol, squarefree_kernel_rational, Conic, NumberTheoryError};
use crate::algebra::{int, is_square_rational, lcm_of_denominators, rational_sqrt, Primes, Rational};

fn disc(a: &Rational, b: &Rational, c: &Rational) -> Rational {
    b * b - int(4) * a * c
}

pub fn prop31_is_parametric(a: &Rational, b: &Rational, c: &Rational) -> Result<bool, NumberTheoryError> {
    let d = disc(a, b, c);
    if d.is_zero() {
        return Err(NumberTheoryError::Domain("b^2 - 4ac must be nonzero".into()));
    }
    Ok(is_square_rational(&d))
}

/// A rational `t0` with `a t0^2 + b t0 + c = d y^2` for some rational `y != 0`,
/// so the specialization at `t0` is `Q(sqrt d)`. Found on the conic
/// `d Y^2 = aT^2 + bT + c` through the rational root `(t1, 0)`.
pub fn prop31_specialization_point(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &BigInt,
) -> Result<Rational, NumberTheoryError> {
    if d.is_zero() {
        return Err(NumberTheoryError::Domain("target d must be nonzero".into()));
    }
    if !prop31_is_parametric(a, b, c)? {
        return Err(NumberTheoryError::NotParametric(format!(
            "discriminant {} is not a square",
            disc(a, b, c)
        )));
    }
    let root = if a.is_zero() {
        -c / b
    } else {
        let s = rational_sqrt(&disc(a, b, c)).expect("square discriminant");
        (-b + s) / (int(2) * a)
    };
    let dq = Rational::from_integer(d.clone());
    let conic = Conic::new(a.clone(), b.clone(), c.clone(), dq.clone(), (root, Rational::zero()))?;
    for k in 1..=16i64 {
        let Some((t0, y)) = conic.point(&int(k)) else { continue };
        let v = a * &t0 * &t0 + b * &t0 + c;
        if !y.is_zero() && !v.is_zero() {
            debug_assert_eq!(squarefree_kernel_rational(&v)?, squarefree_kernel_rational(&dq)?);
            return Ok(t0);
        }
    }
    Err(NumberTheoryError::Domain("no specialization point on the first slopes".into()))
}

/// A prime `p` for which `Q(sqrt p)` is not a specialization: the integral
/// discriminant is a non-residue mod `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionPrime {
    pub prime: u64,
    /// Discriminant after clearing denominators of `(a, b, c)`.
    pub delta: String,
    pub legendre: i8,
    pub euler: i8,
}

/// First `count` odd primes `p` not dividing `2 a delta` (after clearing
/// denominators) with `(delta / p) = -1`. If `Q(sqrt p)` came from `t0`, then
/// `(2a t0 + b)^2 - delta = 4a p s^2` would make `delta` a square mod `p`.
pub fn prop31_obstruction_primes(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    count: usize,
) -> Result<Vec<ObstructionPrime>, NumberTheoryError> {
    if prop31_is_parametric(a, b, c)? {
        return Err(NumberTheoryError::NotApplicable(format!(
            "discriminant {} is a square",
            disc(a, b, c)
        )));
    }
    let l = Rational::from_integer(lcm_of_denominators([a, b, c]));
    let (ai, bi, ci) = ((a * &l).to_integer(), (b * &l).to_integer(), (c * &l).to_integer());
    let delta = &bi * &bi - BigInt::from(4) * &ai * &ci;
    let bad = (BigInt::from(2) * &ai * &delta).abs();
    let mut out = Vec::new();
    for p in Primes::starting_at(3) {
        if out.len() >= count {
            break;
        }
        if (&bad % BigInt::from(p)).is_zero() {
            continue;
        }
        let leg = legendre_symbol(&delta, p);
        if leg == -1 {
            out.push(ObstructionPrime {
                prime: p,
                delta: delta.to_string(),
                legendre: leg,
                euler: euler_criterion(&delta, p),
            });
        }
    }
    debug_assert!(out.iter().all(|o| o.euler == -1));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specialization_points() {
        let t0 = prop31_specialization_point(&int(0), &int(1), &int(0), &BigInt::from(3)).unwrap();
        assert_eq!(squarefree_kernel_rational(&t0).unwrap().value(), &BigInt::from(3));
        let t0 = prop31_specialization_point(&int(1), &int(0), &int(-1), &BigInt::from(2)).unwrap();
        let v = &t0 * &t0 - int(1);
        assert_eq!(squarefree_kernel_rational(&v).unwrap().value(), &BigInt::from(2));
        assert!(matches!(
            prop31_specialization_point(&int(1), &int(0), &int(1), &BigInt::from(2)),
            Err(NumberTheoryError::NotParametric(_))
        ));
        // d equal to a: the first slope is skipped
        let t0 = prop31_specialization_point(&int(2), &int(0), &int(-2), &BigInt::from(2)).unwrap();
        let v = int(2) * &t0 * &t0 - int(2);
        assert!(v != int(0));
    }

    #[test]
    fn obstructions() {
        let ps: Vec<u64> = prop31_obstruction_primes(&int(1), &int(0), &int(1), 5)
            .unwrap()
            .iter()
            .map(|o| o.prime)
            .collect();
        assert_eq!(ps, vec![3, 7, 11, 19, 23]);
        let ps: Vec<u64> = prop31_obstruction_primes(&int(1), &int(0), &int(-2), 4)
            .unwrap()
            .iter()
            .map(|o| o.prime)
            .collect();
        assert_eq!(ps, vec![3, 5, 11, 13]);
        assert!(matches!(
            prop31_obstruction_primes(&int(1), &int(0), &int(-1), 3),
            Err(NumberTheoryError::NotApplicable(_))
        ));
    }
}
