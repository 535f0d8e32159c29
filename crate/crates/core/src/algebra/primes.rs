//! Prime sieving, primality and integer factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// All primes `<= n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Jacobi symbol (a/n) for odd n >= 1.
pub fn jacobi(a: u64, n: u64) -> i8 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    let (mut a, mut n) = (a % n, n);
    let mut s = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                s = -s;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            s = -s;
        }
        a %= n;
    }
    if n == 1 {
        s
    } else {
        0
    }
}

/// Jacobi symbol (a/n) for an arbitrary integer a and odd n >= 1.
pub fn jacobi_big(a: &BigInt, n: u64) -> i8 {
    let r = a.mod_floor(&BigInt::from(n)).to_u64().expect("reduced below n");
    jacobi(r, n)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization `[(p, e)]` in increasing order; `factor_u64(1)` is empty.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut stack = Vec::new();
    let mut n = n;
    for p in [2u64, 3, 5, 7, 11, 13] {
        while n > 1 && n.is_multiple_of(p) {
            stack.push(p);
            n /= p;
        }
    }
    let mut work = if n > 1 { vec![n] } else { vec![] };
    while let Some(m) = work.pop() {
        if is_prime_u64(m) {
            stack.push(m);
        } else {
            let d = rho_u64(m);
            work.push(d);
            work.push(m / d);
        }
    }
    stack.sort_unstable();
    for p in stack {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

fn pow_mod_big(b: &BigInt, e: &BigInt, m: &BigInt) -> BigInt {
    b.modpow(e, m)
}

/// Miller-Rabin with the first 20 prime bases; deterministic below 3.3e24.
pub fn is_probable_prime_big(n: &BigInt) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_negative() || n.is_even() {
        return false;
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71] {
        let mut x = pow_mod_big(&BigInt::from(a), &d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_big(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = BigInt::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of `|n|`, `n != 0`.
pub fn factor_bigint(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    assert!(!n.is_zero(), "factorization of zero");
    if let Some(small) = n.to_u64() {
        return factor_u64(small)
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect();
    }
    let mut primes = Vec::new();
    for p in primes_up_to(1000) {
        let bp = BigInt::from(p);
        while (&n % &bp).is_zero() {
            primes.push(bp.clone());
            n /= &bp;
        }
    }
    let mut work = if n.is_one() { vec![] } else { vec![n] };
    while let Some(m) = work.pop() {
        if let Some(small) = m.to_u64() {
            for (p, e) in factor_u64(small) {
                primes.extend(std::iter::repeat_n(BigInt::from(p), e as usize));
            }
        } else if is_probable_prime_big(&m) {
            primes.push(m);
        } else {
            let d = rho_big(&m);
            work.push(&m / &d);
            work.push(d);
        }
    }
    primes.sort();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Iterator over all primes in increasing order, starting at 2.
pub struct Primes {
    next: u64,
}

impl Primes {
    pub fn new() -> Self {
        Primes { next: 2 }
    }

    pub fn starting_at(n: u64) -> Self {
        Primes { next: n.max(2) }
    }
}

impl Default for Primes {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while !is_prime_u64(self.next) {
            self.next = self.next.checked_add(1)?;
        }
        let p = self.next;
        self.next = self.next.checked_add(1)?;
        Some(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let sieve = primes_up_to(2000);
        let trial: Vec<u64> = (2..=2000u64)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect();
        assert_eq!(sieve, trial);
        assert!(sieve.iter().all(|&p| is_prime_u64(p)));
        assert_eq!(Primes::new().take(5).collect::<Vec<_>>(), vec![2, 3, 5, 7, 11]);
    }

    #[test]
    fn factors_multiply_back() {
        for n in [1u64, 2, 12, 1001, 604800, 999_999_937 * 3, 18446744073709551557, 600851475143] {
            let f = factor_u64(n);
            let back: u128 = f.iter().map(|&(p, e)| (p as u128).pow(e)).product();
            assert_eq!(back, n as u128);
            assert!(f.iter().all(|&(p, _)| is_prime_u64(p)));
        }
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in primes_up_to(200).into_iter().skip(1) {
            for a in 0..3 * p {
                let e = pow_mod(a, (p - 1) / 2, p);
                let expected = if a % p == 0 { 0 } else if e == 1 { 1 } else { -1 };
                assert_eq!(jacobi(a, p), expected, "({a}/{p})");
            }
        }
        // multiplicative in the modulus
        for a in 0..50u64 {
            assert_eq!(jacobi(a, 15), jacobi(a, 3) * jacobi(a, 5));
            assert_eq!(jacobi(a, 9), jacobi(a, 3) * jacobi(a, 3));
        }
        assert_eq!(jacobi_big(&BigInt::from(-1), 7), -1);
        assert_eq!(jacobi_big(&BigInt::from(-4), 5), 1);
    }

    #[test]
    fn big_factorization() {
        let a = BigInt::from(1_000_000_007u64);
        let b = BigInt::from(998_244_353u64);
        let n = &a * &a * &b * BigInt::from(12);
        let f = factor_bigint(&n);
        let back = f
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e));
        assert_eq!(back, n);
        assert!(f.contains(&(a, 2)));
    }
}
