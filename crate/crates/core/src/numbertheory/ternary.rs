//! Diagonal ternary forms `aX^2 + bY^2 + cZ^2`: Legendre's criterion after
//! reduction to squarefree, pairwise coprime coefficients, and a brute-force
//! search used as an independent check inside Holzer's bound.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{legendre_symbol, squarefree_kernel, NumberTheoryError};
use crate::algebra::factor_bigint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawForm")]
pub struct TernaryForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

#[derive(Deserialize)]
struct RawForm {
    a: i64,
    b: i64,
    c: i64,
}

impl TryFrom<RawForm> for TernaryForm {
    type Error = NumberTheoryError;
    fn try_from(r: RawForm) -> Result<Self, NumberTheoryError> {
        TernaryForm::new(r.a, r.b, r.c)
    }
}

impl TernaryForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, NumberTheoryError> {
        if a == 0 || b == 0 || c == 0 {
            return Err(NumberTheoryError::Invalid(format!(
                "coefficients ({a}, {b}, {c}) must be nonzero"
            )));
        }
        Ok(TernaryForm { a, b, c })
    }

    pub fn eval(&self, x: i128, y: i128, z: i128) -> i128 {
        self.a as i128 * x * x + self.b as i128 * y * y + self.c as i128 * z * z
    }

    pub fn parse_json(s: &str) -> Result<Self, NumberTheoryError> {
        serde_json::from_str(s).map_err(|e| NumberTheoryError::Invalid(e.to_string()))
    }
}

impl std::fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}X^2 + {}Y^2 + {}Z^2", self.a, self.b, self.c)
    }
}

/// Squarefree, pairwise coprime form with the same solvability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedForm {
    #[serde(serialize_with = "ser_coeffs")]
    pub coeffs: [BigInt; 3],
    pub log: Vec<String>,
}

fn ser_coeffs<S: serde::Serializer>(c: &[BigInt; 3], s: S) -> Result<S::Ok, S::Error> {
    let v: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    v.serialize(s)
}

const NAMES: [&str; 3] = ["X", "Y", "Z"];

pub fn reduce_form(f: &TernaryForm) -> ReducedForm {
    let mut v = [BigInt::from(f.a), BigInt::from(f.b), BigInt::from(f.c)];
    let mut log = Vec::new();
    loop {
        for i in 0..3 {
            let k = squarefree_kernel(&v[i]).expect("nonzero").value().clone();
            if k != v[i] {
                log.push(format!(
                    "{} -> {}: square factor absorbed into {}",
                    v[i], k, NAMES[i]
                ));
                v[i] = k;
            }
        }
        let pair = [(0, 1), (0, 2), (1, 2)]
            .into_iter()
            .find(|&(i, j)| !v[i].gcd(&v[j]).is_one());
        let Some((i, j)) = pair else { break };
        let l = 3 - i - j;
        let g = v[i].gcd(&v[j]);
        log.push(format!(
            "gcd {g} of the {} and {} coefficients moved onto {} (multiply by {g}, rescale {} and {})",
            NAMES[i], NAMES[j], NAMES[l], NAMES[i], NAMES[j]
        ));
        v[i] = &v[i] / &g;
        v[j] = &v[j] / &g;
        v[l] = &v[l] * &g;
    }
    ReducedForm { coeffs: v, log }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LegendreDecision {
    pub form: TernaryForm,
    pub reduced: ReducedForm,
    pub solvable: bool,
    pub reason: String,
}

/// Legendre: a reduced form is isotropic iff its coefficients are not all of
/// one sign and `-bc`, `-ca`, `-ab` are squares modulo `|a|`, `|b|`, `|c|`.
pub fn legendre_decision(f: &TernaryForm) -> LegendreDecision {
    let reduced = reduce_form(f);
    let [a, b, c] = reduced.coeffs.clone();
    let done = |solvable: bool, reason: String| LegendreDecision {
        form: *f,
        reduced: reduced.clone(),
        solvable,
        reason,
    };
    if a.is_positive() == b.is_positive() && b.is_positive() == c.is_positive() {
        return done(false, "all coefficients have the same sign".into());
    }
    for (m, o1, o2) in [(&a, &b, &c), (&b, &c, &a), (&c, &a, &b)] {
        let target = -(o1 * o2);
        for (q, _) in factor_bigint(m) {
            let q = q.to_u64().expect("factor of a 64-bit coefficient product");
            if q == 2 {
                continue;
            }
            if legendre_symbol(&target, q) != 1 {
                return done(false, format!("{target} is not a square mod {q}"));
            }
        }
    }
    done(true, "sign and residue conditions hold".into())
}

pub fn legendre_solvable(f: &TernaryForm) -> bool {
    legendre_decision(f).solvable
}

/// Holzer's box for a reduced form: if it has a nontrivial zero it has one
/// with `|x| <= sqrt|bc|`, `|y| <= sqrt|ca|`, `|z| <= sqrt|ab|`.
pub fn holzer_bounds(r: &ReducedForm) -> Option<[u64; 3]> {
    let [a, b, c] = &r.coeffs;
    let s = |x: &BigInt, y: &BigInt| (x * y).abs().sqrt().to_u64();
    Some([s(b, c)?, s(c, a)?, s(a, b)?])
}

/// Nontrivial solution with `|x| <= bx`, `|y| <= by`, `|z| <= bz`, if any.
/// Iterates over the two smaller ranges and solves for the third coordinate.
pub fn brute_force_ternary_box(coeffs: [i128; 3], bounds: [u64; 3]) -> Option<[i128; 3]> {
    let mut order = [0usize, 1, 2];
    order.sort_by_key(|&i| bounds[i]);
    let (i, j, k) = (order[0], order[1], order[2]);
    for u in 0..=bounds[i] as i128 {
        for v in 0..=bounds[j] as i128 {
            if u == 0 && v == 0 {
                continue;
            }
            let t = -(coeffs[i] * u * u + coeffs[j] * v * v);
            if t % coeffs[k] != 0 {
                continue;
            }
            let w2 = t / coeffs[k];
            if w2 < 0 {
                continue;
            }
            let w = (w2 as u128).sqrt() as i128;
            if w * w == w2 && w <= bounds[k] as i128 {
                let mut sol = [0i128; 3];
                sol[i] = u;
                sol[j] = v;
                sol[k] = w;
                return Some(sol);
            }
        }
    }
    None
}

pub fn brute_force_ternary(f: &TernaryForm, bound: u64) -> Option<[i128; 3]> {
    brute_force_ternary_box([f.a as i128, f.b as i128, f.c as i128], [bound; 3])
}

/// Whether an exhaustive search of the reduced form inside Holzer's box finds
/// no zero, which proves the form anisotropic.
pub fn holzer_refutes(f: &TernaryForm) -> bool {
    let r = reduce_form(f);
    let bounds = holzer_bounds(&r).expect("bounds fit for 64-bit forms");
    let coeffs = r.coeffs.clone().map(|x| x.to_i128().expect("reduced coefficient fits"));
    brute_force_ternary_box(coeffs, bounds).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: i64, b: i64, c: i64) -> TernaryForm {
        TernaryForm::new(a, b, c).unwrap()
    }

    #[test]
    fn examples() {
        assert!(legendre_solvable(&f(1, 1, -1)));
        assert!(!legendre_solvable(&f(1, 1, -3)));
        assert!(!legendre_solvable(&f(1, 1, 1)));
        assert!(legendre_solvable(&f(2, 3, -5)));
        assert_eq!(brute_force_ternary(&f(2, 3, -5), 5), Some([1, 1, 1]));
        let s = brute_force_ternary(&f(1, 1, -1), 5).unwrap();
        assert_eq!(f(1, 1, -1).eval(s[0], s[1], s[2]), 0);
        assert_eq!(brute_force_ternary(&f(1, 1, -3), 1000), None);
    }

    #[test]
    fn reduction_is_squarefree_coprime() {
        let r = reduce_form(&f(12, 18, -50));
        let [a, b, c] = &r.coeffs;
        assert!(a.gcd(b).is_one() && b.gcd(c).is_one() && a.gcd(c).is_one());
        assert!(!r.log.is_empty());
        assert_eq!(legendre_solvable(&f(12, 18, -50)), !holzer_refutes(&f(12, 18, -50)));
    }

    #[test]
    fn zero_coefficient_rejected() {
        assert!(TernaryForm::new(0, 1, 1).is_err());
        assert!(TernaryForm::parse_json(r#"{"a":0,"b":1,"c":1}"#).is_err());
        assert_eq!(TernaryForm::parse_json(r#"{"a":1,"b":2,"c":-3}"#).unwrap(), f(1, 2, -3));
    }
}
