//! Coefficient rings with exact division, and resultants over them.
//!
//! Polynomials here are plain coefficient slices, lowest degree first, with
//! no trailing zeros. The resultant uses the subresultant pseudo-remainder
//! sequence, so intermediate coefficients stay in the ring and grow only
//! polynomially.

use std::fmt::Debug;

use super::{int, RatPoly, Rational};

pub trait ExactRing: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact; the remainder is discarded.
    fn div_exact(&self, other: &Self) -> Self;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl ExactRing for Rational {
    fn zero() -> Self {
        int(0)
    }
    fn one() -> Self {
        int(1)
    }
    fn from_i64(n: i64) -> Self {
        int(n)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl ExactRing for RatPoly {
    fn zero() -> Self {
        RatPoly::zero()
    }
    fn one() -> Self {
        RatPoly::one()
    }
    fn from_i64(n: i64) -> Self {
        RatPoly::constant(int(n))
    }
    fn is_zero(&self) -> bool {
        RatPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self
            .div_rem(other)
            .expect("exact division by a nonzero polynomial");
        debug_assert!(r.is_zero(), "inexact division {self} / {other}");
        q
    }
}

pub(crate) fn trim<R: ExactRing>(v: &mut Vec<R>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn derivative<R: ExactRing>(p: &[R]) -> Vec<R> {
    let mut d: Vec<R> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.mul(&R::from_i64(i as i64)))
        .collect();
    trim(&mut d);
    d
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`, computed without division.
pub(crate) fn pseudo_rem<R: ExactRing>(a: &[R], b: &[R]) -> Vec<R> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return r;
    }
    let mut unused = (a.len() - b.len() + 1) as u64;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&lr.mul(bc));
        }
        trim(&mut r);
        unused -= 1;
    }
    if unused > 0 {
        let f = lb.pow(unused);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Resultant of two polynomials given as coefficient slices.
pub fn resultant<R: ExactRing>(a: &[R], b: &[R]) -> R {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return R::zero();
    }
    let mut sign_negative = false;
    if a.len() < b.len() {
        let (da, db) = (a.len() - 1, b.len() - 1);
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let apply_sign = |x: R, neg: bool| if neg { x.neg() } else { x };
    if b.len() == 1 {
        let da = (a.len() - 1) as u64;
        return apply_sign(b[0].pow(da), sign_negative);
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = (da - db) as u64;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return R::zero();
        }
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = r.iter().map(|c| c.div_exact(&divisor)).collect();
        g = a[a.len() - 1].clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1))
        };
        if b.len() == 1 {
            let da = (a.len() - 1) as u64;
            let lb = &b[0];
            let hh = if da == 0 {
                h
            } else {
                lb.pow(da).div_exact(&h.pow(da - 1))
            };
            return apply_sign(hh, sign_negative);
        }
    }
}

/// Discriminant `(-1)^(n(n-1)/2) res(P, P') / lc(P)`; `None` for degree < 1.
pub fn discriminant<R: ExactRing>(p: &[R]) -> Option<R> {
    let mut p = p.to_vec();
    trim(&mut p);
    if p.len() < 2 {
        return None;
    }
    let n = (p.len() - 1) as u64;
    if n == 1 {
        return Some(R::one());
    }
    let dp = derivative(&p);
    let res = resultant(&p, &dp);
    let d = res.div_exact(&p[p.len() - 1]);
    Some(if (n * (n - 1) / 2) % 2 == 1 { d.neg() } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    /// lc^(2n-2) * prod_{i<j} (r_i - r_j)^2 for a polynomial built from its roots.
    fn disc_from_roots(lc: &Rational, roots: &[Rational]) -> Rational {
        let n = roots.len() as u64;
        let mut acc = ExactRing::pow(lc, 2 * n - 2);
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let d = &roots[i] - &roots[j];
                acc = acc * &d * &d;
            }
        }
        acc
    }

    fn from_roots(lc: &Rational, roots: &[Rational]) -> Vec<Rational> {
        let mut p = vec![lc.clone()];
        for r in roots {
            let mut next = vec![int(0); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] - c * r;
            }
            p = next;
        }
        p
    }

    /// res(A, B) = lc(A)^deg B * lc(B)^deg A * prod (a_i - b_j).
    fn res_from_roots(la: &Rational, ra: &[Rational], lb: &Rational, rb: &[Rational]) -> Rational {
        let mut acc = ExactRing::pow(la, rb.len() as u64) * ExactRing::pow(lb, ra.len() as u64);
        for x in ra {
            for y in rb {
                acc *= x - y;
            }
        }
        acc
    }

    #[test]
    fn quadratic_discriminant() {
        // Y^2 + 3Y + 5 -> 9 - 20
        assert_eq!(discriminant(&q(&[5, 3, 1])), Some(int(-11)));
    }

    #[test]
    fn depressed_cubic_discriminant() {
        // Y^3 + 4Y + 4 -> -4*64 - 27*16
        assert_eq!(discriminant(&q(&[4, 4, 0, 1])), Some(int(-688)));
    }

    #[test]
    fn degree_zero_has_no_discriminant() {
        assert_eq!(discriminant(&q(&[3])), None);
        assert_eq!(discriminant::<Rational>(&[]), None);
    }

    #[test]
    fn discriminant_matches_root_differences() {
        let cases: Vec<(Rational, Vec<Rational>)> = vec![
            (int(1), vec![int(1), int(2), int(-3)]),
            (int(2), vec![ratio(1, 2), int(0), int(5), int(-1)]),
            (ratio(-3, 5), vec![int(7), ratio(-2, 3), int(1), int(4), int(0)]),
            (int(1), vec![int(2), int(2), int(1)]),
        ];
        for (lc, roots) in cases {
            let p = from_roots(&lc, &roots);
            assert_eq!(discriminant(&p).unwrap(), disc_from_roots(&lc, &roots), "{p:?}");
        }
    }

    #[test]
    fn resultant_matches_root_products() {
        let cases: Vec<(Rational, Vec<Rational>, Rational, Vec<Rational>)> = vec![
            (int(1), vec![int(1), int(2)], int(1), vec![int(3)]),
            (int(2), vec![int(1), int(-1), int(4)], int(3), vec![ratio(1, 2), int(5)]),
            (int(1), vec![int(0)], int(-2), vec![int(1), int(2), int(3), int(4)]),
            (int(1), vec![int(1), int(2), int(3)], int(1), vec![int(3), int(9)]),
            (int(5), vec![], int(1), vec![int(1), int(2)]),
        ];
        for (la, ra, lb, rb) in cases {
            let a = from_roots(&la, &ra);
            let b = from_roots(&lb, &rb);
            assert_eq!(resultant(&a, &b), res_from_roots(&la, &ra, &lb, &rb));
            let swapped = res_from_roots(&lb, &rb, &la, &ra);
            assert_eq!(resultant(&b, &a), swapped);
        }
    }
}
