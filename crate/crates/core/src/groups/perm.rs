//! Permutations of {0, .., n-1} as image arrays.
//!
//! Products compose left to right: `(a * b)(x) = b(a(x))`, so `a * b` means
//! "apply a, then b". Conjugation `g^h` is `h^-1 * g * h`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CycleType, GroupError};

/// Largest permutation degree accepted from the wire.
pub const MAX_PERM_DEGREE: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        if n > MAX_PERM_DEGREE {
            return Err(GroupError::Invalid(format!("degree {n} exceeds {MAX_PERM_DEGREE}")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                if x >= n || used[x] {
                    return Err(GroupError::Invalid(format!("bad cycle {cyc:?} on {n} points")));
                }
                used[x] = true;
                images[x] = cyc[(i + 1) % cyc.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Apply `self`, then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let (mut base, mut e) = if e < 0 {
            (self.inverse(), e.unsigned_abs())
        } else {
            (self.clone(), e as u64)
        };
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `h^-1 * self * h`.
    pub fn conjugate_by(&self, h: &Perm) -> Perm {
        h.inverse().mul(self).mul(h)
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut lengths: Vec<u64> = self.cycles().iter().map(|c| c.len() as u64).collect();
        lengths.extend(std::iter::repeat_n(1, self.degree() - moved));
        CycleType::from_lengths(&lengths)
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().element_order()
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_images(v).map_err(serde::de::Error::custom)
    }
}
