//! Dense univariate polynomials over Q.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, int, parse_rational, AlgebraError, Rational};

/// Largest degree accepted from the wire.
pub const MAX_POLY_DEGREE: usize = 4096;

/// Polynomial in T with rational coefficients, lowest degree first.
pub struct RatPoly {
    coeffs: Vec<Rational>,
    primitive: OnceLock<Vec<BigInt>>,
}

impl Clone for RatPoly {
    fn clone(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.clone(),
            primitive: self.primitive.clone(),
        }
    }
}

impl PartialEq for RatPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for RatPoly {}

impl Hash for RatPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly {
            coeffs,
            primitive: OnceLock::new(),
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial T.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `T - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), int(1)])
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut v = vec![int(0); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| int(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(|| int(0))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self(q(T))`.
    pub fn compose(&self, q: &RatPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly), AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::Domain("division by the zero polynomial".into()));
        }
        let dd = d.coeffs.len() - 1;
        let inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![int(0); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, d: &RatPoly) -> Result<RatPoly, AlgebraError> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive_ints(&self) -> &[BigInt] {
        self.primitive.get_or_init(|| {
            if self.is_zero() {
                return Vec::new();
            }
            let den = super::lcm_of_denominators(self.coeffs.iter());
            let mut ints: Vec<BigInt> = self
                .coeffs
                .iter()
                .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
                .collect();
            let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
            let neg = ints.last().is_some_and(|c| c.is_negative());
            for c in ints.iter_mut() {
                *c = &*c / &g;
                if neg {
                    *c = -&*c;
                }
            }
            ints
        })
    }

    pub fn primitive(&self) -> RatPoly {
        Self::from_bigints(self.primitive_ints())
    }

    /// `P / gcd(P, P')` in primitive integer form.
    pub fn squarefree_part(&self) -> Result<RatPoly, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::Domain("squarefree part of zero".into()));
        }
        if self.is_constant() {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.div_rem(&g)?;
        Ok(q.primitive())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// `T^deg * P(1/T)`.
    pub fn reversed(&self) -> RatPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Minimal polynomial of `1/t` given that of `t`, in primitive form.
    /// By convention the result is 1 when `m = T` (the root is 0), and also
    /// for constant input.
    pub fn reciprocal_minpoly(&self) -> Result<RatPoly, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::Domain("reciprocal of zero polynomial".into()));
        }
        // Strip factors of T; an irreducible m with m(0) = 0 is T itself.
        let shift = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let stripped = Self::new(self.coeffs[shift..].to_vec());
        if stripped.is_constant() {
            return Ok(Self::one());
        }
        Ok(stripped.reversed().primitive())
    }

    pub fn to_wire(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn from_wire<S: AsRef<str>>(coeffs: &[S]) -> Result<RatPoly, AlgebraError> {
        if coeffs.len() > MAX_POLY_DEGREE + 1 {
            return Err(AlgebraError::Parse(format!(
                "polynomial has {} coefficients, limit is {}",
                coeffs.len(),
                MAX_POLY_DEGREE + 1
            )));
        }
        let parsed = coeffs
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(parsed))
    }

    /// Parses the JSON wire form, e.g. `["-2","0","1"]`.
    pub fn parse_json(s: &str) -> Result<RatPoly, AlgebraError> {
        let v: Vec<String> =
            serde_json::from_str(s).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        Self::from_wire(&v)
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        RatPoly::from_wire(&v).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "T")?,
                _ => write!(f, "T^{i}")?,
            }
        }
        Ok(())
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| int(0));
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        RatPoly::new(add_coeffs(&self.coeffs, &o.coeffs, false))
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        RatPoly::new(add_coeffs(&self.coeffs, &o.coeffs, true))
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![int(0); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, o: RatPoly) -> RatPoly {
                (&self).$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

/// The n-th cyclotomic polynomial, `n >= 1`.
pub fn cyclotomic(n: u64) -> RatPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut p = RatPoly::monomial(int(1), n as usize) - RatPoly::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.div_rem(&cyclotomic(d)).expect("nonzero").0;
        }
    }
    p
}

/// `Some(n)` when the monic form of `p` is the n-th cyclotomic polynomial
/// (degree at most 64).
pub fn cyclotomic_index(p: &RatPoly) -> Option<u64> {
    let d = p.degree()? as u64;
    if d == 0 || d > 64 {
        return None;
    }
    let m = p.monic();
    let phi = |n: u64| super::factor_u64(n).iter().fold(n, |acc, &(q, _)| acc / q * (q - 1));
    (1..=2 * d * d + 2).find(|&n| phi(n) == d && cyclotomic(n) == m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(p(&[1, -2, 1]).squarefree_part().unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[-2, 0, 1]).squarefree_part().unwrap(), p(&[-2, 0, 1]));
        let a = p(&[-2, 0, 1]);
        let b = p(&[-3, 1]);
        let input = &(&a * &a) * &b;
        assert_eq!(input.squarefree_part().unwrap(), &a * &b);
        assert!(RatPoly::zero().squarefree_part().is_err());
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p(&[-2, 0, 1]).reciprocal_minpoly().unwrap(), p(&[-1, 0, 2]));
        assert_eq!(p(&[0, 1]).reciprocal_minpoly().unwrap(), p(&[1]));
        assert_eq!(p(&[-3, 1]).reciprocal_minpoly().unwrap(), p(&[-1, 3]));
    }

    #[test]
    fn primitive_form() {
        let q = RatPoly::new(vec![ratio(-1, 2), int(0), ratio(-3, 4)]);
        // -(3/4)T^2 - 1/2  ->  3T^2 + 2
        assert_eq!(q.primitive(), p(&[2, 0, 3]));
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(5), p(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn display_and_wire() {
        assert_eq!(p(&[-2, 0, 1]).to_string(), "T^2 - 2");
        let q = RatPoly::new(vec![ratio(1, 2), int(-3)]);
        assert_eq!(q.to_string(), "-3*T + 1/2");
        let w = q.to_wire();
        assert_eq!(RatPoly::from_wire(&w).unwrap(), q);
        assert_eq!(RatPoly::parse_json(r#"["-2","0","1"]"#).unwrap(), p(&[-2, 0, 1]));
    }

    #[test]
    fn division_identity() {
        let a = p(&[3, -1, 4, 1, -5, 9]);
        let b = p(&[2, 0, -7]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }
}
