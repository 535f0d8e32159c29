//! Rational roots, small-degree factorization and irreducibility over Q.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::sturm::SturmChain;
use super::{
    factor_degree_pattern_mod_p, int, rational_sqrt, AlgebraError, Primes,
    RatPoly, Rational,
};

/// Good primes tried when looking for an irreducible reduction.
const IRREDUCIBILITY_PRIMES: usize = 25;

/// Distinct rational roots in increasing order.
pub fn rational_roots(p: &RatPoly) -> Result<Vec<Rational>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::Domain("roots of the zero polynomial".into()));
    }
    let sf = p.squarefree_part()?;
    let mut roots = Vec::new();
    let shift = sf.coeffs().iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(int(0));
    }
    let core = RatPoly::new(sf.coeffs()[shift..].to_vec());
    if core.is_constant() {
        return Ok(roots);
    }
    // Q(Z) = a^(n-1) P(Z/a) is monic with integer coefficients, so its
    // rational roots are integers; P's roots are those divided by a.
    let a_ints = core.primitive_ints();
    let n = a_ints.len() - 1;
    let a = a_ints[n].clone();
    let mut q = Vec::with_capacity(n + 1);
    let mut apow = BigInt::one();
    for i in (0..=n).rev() {
        // coefficient of Z^i is a_i * a^(n-1-i)
        if i == n {
            q.push(BigInt::one());
        } else {
            q.push(&a_ints[i] * &apow);
            apow *= &a;
        }
    }
    q.reverse();
    let qpoly = RatPoly::from_bigints(&q);
    let bound = q.iter().map(|c| c.abs()).max().unwrap_or_default() + BigInt::one();
    let chain = SturmChain::new(&qpoly)?;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let lo = -Rational::from_integer(bound.clone()) - &half;
    let hi = Rational::from_integer(bound) + &half;
    let mut stack = vec![(lo, hi)];
    let mut int_roots = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        if chain.count_in(&lo, &hi) == 0 {
            continue;
        }
        let width = &hi - &lo;
        if width.is_one() {
            let k = &lo + &half;
            if qpoly.eval(&k).is_zero() {
                int_roots.push(k);
            }
            continue;
        }
        // split at a half-integer
        let mid_int = ((&lo + &hi) / int(2)).floor();
        let mid = mid_int + &half;
        let mid = if mid >= hi { &hi - int(1) } else { mid };
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    let ar = Rational::from_integer(a);
    roots.extend(int_roots.into_iter().map(|z| z / &ar));
    roots.sort();
    Ok(roots)
}

/// For a quartic without rational roots, a factorization into two rational
/// quadratics if one exists (each returned monic).
pub fn quadratic_pair_split(f: &RatPoly) -> Result<Option<(RatPoly, RatPoly)>, AlgebraError> {
    if f.degree() != Some(4) {
        return Err(AlgebraError::Domain("quadratic split needs a quartic".into()));
    }
    let m = f.monic();
    let a = m.coeff(3);
    let b = m.coeff(2);
    let c = m.coeff(1);
    let d = m.coeff(0);
    let resolvent = RatPoly::new(vec![
        -(&a * &a * &d - int(4) * &b * &d + &c * &c),
        &a * &c - int(4) * &d,
        -b.clone(),
        int(1),
    ]);
    for y in rational_roots(&resolvent)? {
        let dq = &y * &y - int(4) * &d;
        let dp = &a * &a - int(4) * (&b - &y);
        let (Some(sq), Some(sp)) = (rational_sqrt(&dq), rational_sqrt(&dp)) else {
            continue;
        };
        let q1 = (&y + &sq) / int(2);
        let q2 = (&y - &sq) / int(2);
        let p1 = (&a + &sp) / int(2);
        let p2 = (&a - &sp) / int(2);
        for (q, s) in [(&q1, &q2), (&q2, &q1)] {
            let g = RatPoly::new(vec![q.clone(), p1.clone(), int(1)]);
            let h = RatPoly::new(vec![s.clone(), p2.clone(), int(1)]);
            if &g * &h == m {
                return Ok(Some((g, h)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Irreducibility {
    Irreducible { certificate: String },
    Reducible { certificate: String },
    Inconclusive { reason: String },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible { .. })
    }
}

/// Degrees that can occur as a proper factor's degree, given a factor pattern.
fn subset_sums(pattern: &[usize], n: usize) -> Vec<bool> {
    let mut can = vec![false; n + 1];
    can[0] = true;
    for &d in pattern {
        for s in (d..=n).rev() {
            if can[s - d] {
                can[s] = true;
            }
        }
    }
    can
}

/// Irreducibility over Q: exact up to degree 4, certificate search above.
pub fn irreducibility(p: &RatPoly) -> Result<Irreducibility, AlgebraError> {
    let n = match p.degree() {
        None | Some(0) => {
            return Err(AlgebraError::Domain("irreducibility of a constant".into()));
        }
        Some(n) => n,
    };
    if n == 1 {
        return Ok(Irreducibility::Irreducible {
            certificate: "linear".into(),
        });
    }
    if !p.is_squarefree() {
        return Ok(Irreducibility::Reducible {
            certificate: format!("repeated factor {}", p.gcd(&p.derivative())),
        });
    }
    if let Some(r) = rational_roots(p)?.first() {
        return Ok(Irreducibility::Reducible {
            certificate: format!("rational root {r}"),
        });
    }
    if n <= 3 {
        return Ok(Irreducibility::Irreducible {
            certificate: "no rational root".into(),
        });
    }
    if n == 4 {
        return Ok(match quadratic_pair_split(p)? {
            Some((g, h)) => Irreducibility::Reducible {
                certificate: format!("({g}) * ({h})"),
            },
            None => Irreducibility::Irreducible {
                certificate: "no rational root and no rational quadratic factor".into(),
            },
        });
    }
    if let Some(k) = super::cyclotomic_index(p) {
        return Ok(Irreducibility::Irreducible {
            certificate: format!("cyclotomic polynomial Phi_{k}"),
        });
    }
    let mut possible = vec![true; n + 1];
    let mut tried = 0;
    for q in Primes::new() {
        if tried >= IRREDUCIBILITY_PRIMES {
            break;
        }
        let pattern = match factor_degree_pattern_mod_p(p, q) {
            Ok(pat) => pat,
            Err(AlgebraError::Excluded(_)) => continue,
            Err(e) => return Err(e),
        };
        tried += 1;
        if pattern == [n] {
            return Ok(Irreducibility::Irreducible {
                certificate: format!("irreducible mod {q}"),
            });
        }
        let sums = subset_sums(&pattern, n);
        for (d, ok) in possible.iter_mut().enumerate() {
            *ok &= sums[d];
        }
        if (1..n).all(|d| !possible[d]) {
            return Ok(Irreducibility::Irreducible {
                certificate: format!("incompatible factor degrees mod primes up to {q}"),
            });
        }
    }
    Ok(Irreducibility::Inconclusive {
        reason: format!("no irreducibility certificate among {IRREDUCIBILITY_PRIMES} good primes"),
    })
}

/// Factorization of a nonzero polynomial into distinct irreducible factors
/// (primitive form), ignoring multiplicities and constants. Exact when every
/// factor left after removing rational roots has degree at most 4 or carries
/// an irreducibility certificate; otherwise an error. Linear factors come
/// first, in increasing order of their roots.
pub fn factor_small(p: &RatPoly) -> Result<Vec<RatPoly>, AlgebraError> {
    let sf = p.squarefree_part()?;
    let mut factors = Vec::new();
    let mut rest = sf.clone();
    for r in rational_roots(&sf)? {
        let lin = RatPoly::linear_root(&r);
        rest = rest.div_rem(&lin)?.0;
        factors.push(lin.primitive());
    }
    match rest.degree() {
        None | Some(0) => {}
        Some(4) => match quadratic_pair_split(&rest)? {
            Some((g, h)) => {
                factors.push(g.primitive());
                factors.push(h.primitive());
            }
            None => factors.push(rest.primitive()),
        },
        Some(d) if d <= 3 => factors.push(rest.primitive()),
        Some(_) => match irreducibility(&rest)? {
            Irreducibility::Irreducible { .. } => factors.push(rest.primitive()),
            other => {
                return Err(AlgebraError::Domain(format!(
                    "cannot factor {rest} exactly: {other:?}; pass its factorization"
                )))
            }
        },
    }
    Ok(factors)
}

/// True iff `p` is a nonzero constant times the square of a polynomial.
pub fn is_square_poly(p: &RatPoly) -> bool {
    if p.is_zero() {
        return false;
    }
    // Peel off the radical twice per round; any odd multiplicity leaves a remainder.
    let mut rest = p.clone();
    while !rest.is_constant() {
        let g = rest.gcd(&rest.derivative());
        let radical = rest.div_rem(&g).expect("nonzero").0;
        let (q1, r1) = rest.div_rem(&radical).expect("nonzero");
        let (q2, r2) = q1.div_rem(&radical).expect("nonzero");
        if !r1.is_zero() || !r2.is_zero() {
            return false;
        }
        rest = q2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclotomic, ratio};

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn finds_rational_roots() {
        let f = &(&p(&[-1, 2]) * &p(&[1, 3])) * &p(&[-5, 1]);
        assert_eq!(rational_roots(&f).unwrap(), vec![ratio(-1, 3), ratio(1, 2), int(5)]);
        assert!(rational_roots(&p(&[-2, 0, 1])).unwrap().is_empty());
        assert_eq!(rational_roots(&p(&[0, 0, 1])).unwrap(), vec![int(0)]);
        let big = &p(&[-1_000_003, 1]) * &p(&[7, 0, 1]);
        assert_eq!(rational_roots(&big).unwrap(), vec![int(1_000_003)]);
    }

    #[test]
    fn quartic_splits() {
        let f = &p(&[-2, 0, 1]) * &p(&[-3, 0, 1]);
        let (g, h) = quadratic_pair_split(&f).unwrap().unwrap();
        assert_eq!(&g * &h, f);
        assert!(quadratic_pair_split(&cyclotomic(5)).unwrap().is_none());
        // T^4 + 1 is irreducible over Q but reducible mod every prime.
        assert!(quadratic_pair_split(&p(&[1, 0, 0, 0, 1])).unwrap().is_none());
        // T^4 + 4 = (T^2 + 2T + 2)(T^2 - 2T + 2)
        assert!(quadratic_pair_split(&p(&[4, 0, 0, 0, 1])).unwrap().is_some());
    }

    #[test]
    fn irreducibility_verdicts() {
        assert!(irreducibility(&cyclotomic(7)).unwrap().is_irreducible());
        // T^5 + T + 1 = (T^2 + T + 1)(T^3 - T^2 + 1): no certificate can exist.
        assert!(!irreducibility(&p(&[1, 1, 0, 0, 0, 1])).unwrap().is_irreducible());
        assert!(irreducibility(&p(&[-2, 0, 0, 0, 0, 1])).unwrap().is_irreducible());
        assert!(matches!(
            irreducibility(&p(&[-2, 0, 0, 1])).unwrap(),
            Irreducibility::Irreducible { .. }
        ));
        assert!(matches!(
            irreducibility(&p(&[-8, 0, 0, 1])).unwrap(),
            Irreducibility::Reducible { .. }
        ));
    }

    #[test]
    fn small_factorization() {
        let f = &(&p(&[-2, 0, 1]) * &p(&[-3, 0, 1])) * &p(&[0, 1]);
        let fs = factor_small(&f).unwrap();
        assert_eq!(fs, vec![p(&[0, 1]), p(&[-2, 0, 1]), p(&[-3, 0, 1])]);
        assert_eq!(factor_small(&p(&[-4, 0, 1])).unwrap(), vec![p(&[2, 1]), p(&[-2, 1])]);
    }

    #[test]
    fn square_polys() {
        assert!(is_square_poly(&p(&[1, -2, 1])));
        assert!(is_square_poly(&p(&[4, 0, 4, 0, 1])));
        assert!(!is_square_poly(&p(&[0, 1])));
        assert!(!is_square_poly(&p(&[-1, 0, 1])));
    }
}
