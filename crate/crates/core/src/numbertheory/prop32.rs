//! Biquadratic fields `Q(sqrt d1, sqrt d2)` that are not specializations of
//! `Q(T)(sqrt(aT), sqrt(bT - b))`.
//!
//! If such a field came from `t0`, one of six diagonal ternary forms would
//! have a nontrivial zero. A pair is emitted only once all six are shown
//! anisotropic by Legendre's criterion and by a search in Holzer's box.

use num_bigint::BigInt;
use serde::Serialize;

use super::{holzer_refutes, legendre_decision, squarefree_kernel, LegendreDecision, NumberTheoryError, TernaryForm};
use crate::algebra::{exact_sqrt, jacobi_big, Primes};

/// Forms (i)..(vi) for the pair `(d1, d2)`.
pub fn prop32_forms(a: i64, b: i64, d1: i64, d2: i64) -> Result<[TernaryForm; 6], NumberTheoryError> {
    let m = |x: i64, y: i64| {
        x.checked_mul(y)
            .ok_or_else(|| NumberTheoryError::Invalid("coefficient overflow".into()))
    };
    Ok([
        TernaryForm::new(m(a, d1)?, -m(b, d2)?, -1)?,
        TernaryForm::new(a, -m(b, d2)?, -d1)?,
        TernaryForm::new(m(a, d2)?, -m(b, d1)?, -1)?,
        TernaryForm::new(a, -m(b, d1)?, -d2)?,
        TernaryForm::new(m(a, d2)?, -b, -d1)?,
        TernaryForm::new(m(a, d1)?, -b, -d2)?,
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop32Pair {
    pub d1: i64,
    pub d2: i64,
    pub decisions: Vec<LegendreDecision>,
    /// Every form also has no zero inside Holzer's box.
    pub holzer_refuted: bool,
}

fn is_squarefree(n: i64) -> bool {
    n != 0 && squarefree_kernel(&BigInt::from(n)).map(|k| k.value() == &BigInt::from(n)).unwrap_or(false)
}

fn is_square(n: i64) -> bool {
    n >= 0 && exact_sqrt(&BigInt::from(n)).is_some()
}

fn check_ab(a: i64, b: i64) -> Result<(), NumberTheoryError> {
    if !is_squarefree(a) || !is_squarefree(b) {
        return Err(NumberTheoryError::Invalid(format!(
            "a = {a} and b = {b} must be nonzero squarefree integers"
        )));
    }
    Ok(())
}

/// Certifies one pair; `Ok(None)` when some form is isotropic.
pub fn certify_prop32_pair(a: i64, b: i64, d1: i64, d2: i64) -> Result<Option<Prop32Pair>, NumberTheoryError> {
    check_ab(a, b)?;
    if d1 == d2 || !is_squarefree(d1) || !is_squarefree(d2) {
        return Err(NumberTheoryError::Invalid(format!(
            "({d1}, {d2}) must be distinct squarefree integers"
        )));
    }
    if is_square(d1) || is_square(d2) || d1.checked_mul(d2).is_some_and(is_square) {
        return Err(NumberTheoryError::Invalid(format!(
            "Q(sqrt {d1}, sqrt {d2}) is not biquadratic"
        )));
    }
    let forms = prop32_forms(a, b, d1, d2)?;
    let decisions: Vec<LegendreDecision> = forms.iter().map(legendre_decision).collect();
    if decisions.iter().any(|d| d.solvable) {
        return Ok(None);
    }
    let holzer_refuted = forms.iter().all(holzer_refutes);
    if !holzer_refuted {
        return Ok(None);
    }
    Ok(Some(Prop32Pair {
        d1,
        d2,
        decisions,
        holzer_refuted,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop32Search {
    pub a: i64,
    pub b: i64,
    /// How candidates were generated.
    pub recipe: String,
    pub prime_bound: u64,
    pub pairs: Vec<Prop32Pair>,
    /// False when the prime bound ran out before `count` pairs.
    pub complete: bool,
}

fn first_d2(a: i64, b: i64) -> i64 {
    (2..)
        .filter(|&d| is_squarefree(d))
        .find(|&d| !is_square(a * d) && (b == 1 || !is_square(a * b * d)))
        .expect("some squarefree d2 works")
}

/// Up to `count` certified pairs with `|d1|` a prime `<= prime_bound`.
///
/// For `a > 0, b > 0` candidates follow the proof: fix `d2 > 0` with `a d2`
/// (and `a b d2` when `b != 1`) non-squares, take `d1 = -p` for primes `p`
/// modulo which those are non-residues. For `a < 0 < b` every form is
/// definite once `d1, d2 > 0`. The remaining sign cases scan `d1 = +-p` against
/// a few small `d2`.
pub fn prop32_nonspecializable_pairs(
    a: i64,
    b: i64,
    count: usize,
    prime_bound: u64,
) -> Result<Prop32Search, NumberTheoryError> {
    check_ab(a, b)?;
    let mut pairs = Vec::new();
    let recipe;
    let push = |d1: i64, d2: i64, pairs: &mut Vec<Prop32Pair>| -> Result<(), NumberTheoryError> {
        if pairs.len() < count && d1 != d2 {
            if let Some(p) = certify_prop32_pair(a, b, d1, d2)? {
                pairs.push(p);
            }
        }
        Ok(())
    };
    let primes = || Primes::starting_at(3).take_while(move |&p| p <= prime_bound);
    if a > 0 && b > 0 {
        let d2 = first_d2(a, b);
        recipe = if b == 1 {
            format!("b = 1: d2 = {d2}, d1 = -p with (a d2 / p) = -1")
        } else {
            format!("b != 1: d2 = {d2}, d1 = -p with (a d2 / p) = (a b d2 / p) = -1")
        };
        for p in primes() {
            let bp = BigInt::from(a) * BigInt::from(b) * BigInt::from(d2);
            if (bp.clone() % BigInt::from(p)) == BigInt::from(0) {
                continue;
            }
            let ad2 = BigInt::from(a) * BigInt::from(d2);
            if jacobi_big(&ad2, p) == -1 && (b == 1 || jacobi_big(&bp, p) == -1) {
                push(-(p as i64), d2, &mut pairs)?;
            }
        }
    } else if a < 0 && b > 0 {
        recipe = "a < 0 < b: d1, d2 > 0 make every form definite".to_string();
        for p in primes() {
            push(p as i64, 2, &mut pairs)?;
        }
    } else {
        recipe = "sign case scanned: d1 = +-p against small d2".to_string();
        let d2s: Vec<i64> = (-30i64..=30).filter(|&d| d != 1 && is_squarefree(d)).collect();
        'outer: for p in primes() {
            for d1 in [-(p as i64), p as i64] {
                for &d2 in &d2s {
                    if pairs.len() >= count {
                        break 'outer;
                    }
                    if d2 != d1 && !is_square(d1 * d2) {
                        push(d1, d2, &mut pairs)?;
                    }
                }
            }
        }
    }
    Ok(Prop32Search {
        a,
        b,
        recipe,
        prime_bound,
        complete: pairs.len() >= count,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_case() {
        let s = prop32_nonspecializable_pairs(1, 1, 5, 500).unwrap();
        assert!(s.complete);
        assert_eq!(s.pairs[0].d1, -3);
        assert_eq!(s.pairs[0].d2, 2);
        for p in &s.pairs {
            assert!(p.holzer_refuted && p.decisions.iter().all(|d| !d.solvable));
        }
    }

    #[test]
    fn other_sign_cases() {
        for (a, b) in [(1, 2), (-1, 1), (1, -1), (-1, -1), (-2, -3), (3, -5)] {
            let s = prop32_nonspecializable_pairs(a, b, 3, 500).unwrap();
            assert!(s.complete, "({a}, {b}): {}", s.recipe);
        }
    }

    #[test]
    fn rejected_inputs() {
        assert!(certify_prop32_pair(1, 1, 1, 1).is_err());
        assert!(certify_prop32_pair(1, 1, 4, 3).is_err());
        assert!(certify_prop32_pair(1, 1, 2, 8 / 4).is_err());
        assert!(prop32_nonspecializable_pairs(4, 1, 1, 100).is_err());
    }
}
