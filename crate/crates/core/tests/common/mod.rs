//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's own number theory.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Plain sieve of Eratosthenes.
pub fn sieve(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut comp = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !comp[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                comp[j] = true;
                j += i;
            }
        }
    }
    out
}

pub fn is_square_int(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// `q` is the square of a rational (zero included).
pub fn is_square_q(q: &BigRational) -> bool {
    is_square_int(q.numer()) && is_square_int(q.denom())
}

/// `q / d` is a nonzero rational square.
pub fn same_square_class(q: &BigRational, d: &BigInt) -> bool {
    !q.is_zero() && is_square_q(&(q / BigRational::from_integer(d.clone())))
}

pub fn pow_mod(b: i64, mut e: u64, p: u64) -> u64 {
    let m = p as i128;
    let mut base = (b as i128).rem_euclid(m);
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// `P(t) mod p` for integer coefficients, by direct evaluation.
pub fn has_root_mod(coeffs: &[i64], p: u64) -> bool {
    let p = p as i128;
    (0..p).any(|t| {
        let mut acc = 0i128;
        for &c in coeffs.iter().rev() {
            acc = (acc * t + c as i128).rem_euclid(p);
        }
        acc == 0
    })
}

/// All permutations of 0..n (Heap's algorithm), as image vectors.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            go(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    go(n, &mut a, &mut out);
    out
}

pub fn is_even_images(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}
