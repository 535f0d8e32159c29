//! Prime divisors of polynomials over Z: `p` divides `P` when `P(t0)` lies
//! in `pZ_(p)` for some rational `t0`. Away from primes dividing the leading
//! coefficient or the denominators this means `P` has a root mod `p`.

use serde::Serialize;

use super::NumberTheoryError;
use crate::algebra::{primes_up_to, roots_mod_p, AlgebraError, RatPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisorVerdict {
    Divisor,
    NonDivisor,
    Excluded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeDivisorReport {
    pub prime: u64,
    pub verdict: DivisorVerdict,
    /// A residue `t0` with `P(t0) = 0 mod p`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

pub fn is_prime_divisor(poly: &RatPoly, p: u64) -> Result<PrimeDivisorReport, NumberTheoryError> {
    if poly.degree().unwrap_or(0) == 0 {
        return Err(NumberTheoryError::Domain(
            "prime divisors of a constant polynomial".into(),
        ));
    }
    match roots_mod_p(poly, p) {
        Ok(roots) => Ok(PrimeDivisorReport {
            prime: p,
            verdict: if roots.is_empty() {
                DivisorVerdict::NonDivisor
            } else {
                DivisorVerdict::Divisor
            },
            witness: roots.first().copied(),
            reason: None,
        }),
        Err(AlgebraError::Excluded(_)) => Ok(PrimeDivisorReport {
            prime: p,
            verdict: DivisorVerdict::Excluded,
            witness: None,
            reason: Some(format!(
                "{p} divides the leading coefficient or a denominator of {poly}"
            )),
        }),
        Err(e) => Err(e.into()),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    pub bound: u64,
    pub divisors: Vec<u64>,
    pub non_divisors: Vec<u64>,
    pub excluded: Vec<u64>,
}

/// Classifies every prime `<= bound`.
pub fn prime_divisor_census(poly: &RatPoly, bound: u64) -> Result<Census, NumberTheoryError> {
    let mut c = Census {
        bound,
        ..Census::default()
    };
    for p in primes_up_to(bound) {
        match is_prime_divisor(poly, p)?.verdict {
            DivisorVerdict::Divisor => c.divisors.push(p),
            DivisorVerdict::NonDivisor => c.non_divisors.push(p),
            DivisorVerdict::Excluded => c.excluded.push(p),
        }
    }
    Ok(c)
}
