//! Polynomials over the prime field F_p, for word-sized p.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::primes::{is_prime_u64, mul_mod, pow_mod};
use super::{AlgebraError, RatPoly};

/// Below this modulus roots are found by evaluating at every residue.
const BRUTE_FORCE_LIMIT: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn reduce_big(c: &BigInt, p: u64) -> u64 {
    let r = c % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits in u64")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

impl PrimeFieldPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = PrimeFieldPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        f.trim();
        f
    }

    /// Reduction of the primitive integer form of `poly`.
    ///
    /// Fails with `Excluded(p)` when p divides the leading coefficient of the
    /// primitive form, or the numerator or denominator of the scalar relating
    /// `poly` to its primitive form.
    pub fn reduce(poly: &RatPoly, p: u64) -> Result<Self, AlgebraError> {
        if !is_prime_u64(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if poly.is_zero() {
            return Err(AlgebraError::Domain("reduction of the zero polynomial".into()));
        }
        let prim = poly.primitive_ints();
        let bp = BigInt::from(p);
        let lc = prim.last().expect("nonzero");
        let scale = poly.leading() / super::Rational::from_integer(lc.clone());
        if (lc % &bp).is_zero()
            || (scale.numer() % &bp).is_zero()
            || (scale.denom() % &bp).is_zero()
        {
            return Err(AlgebraError::Excluded(p));
        }
        Ok(Self::new(p, prim.iter().map(|c| reduce_big(c, p)).collect()))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.p) + c) % self.p;
        }
        acc
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = o.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(self.p, v)
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod(*d.coeffs.last().unwrap(), p);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::new(p, vec![]), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = mul_mod(r[i + dd], inv, p);
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = (r[i + j] + p - mul_mod(c, dc, p)) % p;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(p, q), Self::new(p, r))
    }

    fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                Self::new(self.p, self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect())
            }
        }
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// `base^e mod m`.
    fn pow_mod(base: &Self, mut e: u64, m: &Self) -> Self {
        let mut acc = Self::new(base.p, vec![1]).rem(m);
        let mut b = base.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree().is_some_and(|_| self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// Sorted roots in `0..p`.
    pub fn roots(&self) -> Vec<u64> {
        let p = self.p;
        let Some(deg) = self.degree() else {
            return (0..p).collect();
        };
        if deg == 0 {
            return Vec::new();
        }
        if p <= BRUTE_FORCE_LIMIT {
            return (0..p).filter(|&x| self.eval(x) == 0).collect();
        }
        let f = self.monic();
        let x = Self::x(p);
        let xp = Self::pow_mod(&x, p, &f);
        let g = xp.sub(&x).gcd(&f);
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(p ^ 0x9e37_79b9_7f4a_7c15);
        split_linear(&g, &mut rng, &mut out);
        out.sort_unstable();
        out
    }

    /// Degrees of the irreducible factors of a squarefree polynomial.
    pub fn distinct_degree_pattern(&self) -> Vec<usize> {
        let p = self.p;
        let mut f = self.monic();
        let x = Self::x(p);
        let mut h = x.clone();
        let mut pattern = Vec::new();
        let mut i = 1;
        while f.degree().unwrap_or(0) >= 2 * i {
            h = Self::pow_mod(&h, p, &f);
            let g = h.sub(&x).gcd(&f);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 {
                pattern.extend(std::iter::repeat_n(i, gd / i));
                f = f.div_rem(&g).0;
                h = h.rem(&f);
            }
            i += 1;
        }
        if let Some(d) = f.degree() {
            if d > 0 {
                pattern.push(d);
            }
        }
        pattern.sort_unstable();
        pattern
    }
}

/// Appends the roots of `g`, a monic product of distinct linear factors.
fn split_linear(g: &PrimeFieldPoly, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    let p = g.p;
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let c = g.coeffs[0];
            out.push((p - c) % p);
        }
        Some(d) => loop {
            let a = rng.gen_range(0..p);
            let shift = PrimeFieldPoly::new(p, vec![a, 1]);
            let w = PrimeFieldPoly::pow_mod(&shift, (p - 1) / 2, g);
            let h = w.sub(&PrimeFieldPoly::new(p, vec![1])).gcd(g);
            let hd = h.degree().unwrap_or(0);
            if hd > 0 && hd < d {
                let rest = g.div_rem(&h).0.monic();
                split_linear(&h, rng, out);
                split_linear(&rest, rng, out);
                return;
            }
        },
    }
}

/// Residues `x` in `0..p` with `P(x) = 0 mod p`.
pub fn roots_mod_p(poly: &RatPoly, p: u64) -> Result<Vec<u64>, AlgebraError> {
    Ok(PrimeFieldPoly::reduce(poly, p)?.roots())
}

/// Degrees of the irreducible factors mod p; the reduction must be squarefree.
pub fn factor_degree_pattern_mod_p(poly: &RatPoly, p: u64) -> Result<Vec<usize>, AlgebraError> {
    let f = PrimeFieldPoly::reduce(poly, p)?;
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    if !f.is_squarefree() {
        return Err(AlgebraError::Excluded(p));
    }
    Ok(f.distinct_degree_pattern())
}
