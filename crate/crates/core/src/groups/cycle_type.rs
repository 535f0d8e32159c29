//! Cycle types `1^l1 2^l2 ... n^ln`, stored sparsely so huge degrees are cheap.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GroupError, Perm};

/// Longest cycle-type string accepted by the parser.
pub const MAX_CYCLE_TYPE_LEN: usize = 4096;

/// Map from cycle length to number of cycles of that length (counts > 0).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    counts: BTreeMap<u64, u64>,
}

impl CycleType {
    pub fn from_counts(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self, GroupError> {
        let mut counts = BTreeMap::new();
        let mut degree: u64 = 0;
        for (len, c) in pairs {
            if len == 0 {
                return Err(GroupError::Invalid("cycle length 0".into()));
            }
            if c == 0 {
                continue;
            }
            degree = len
                .checked_mul(c)
                .and_then(|x| degree.checked_add(x))
                .ok_or_else(|| GroupError::Invalid("cycle type degree overflows".into()))?;
            *counts.entry(len).or_insert(0) += c;
        }
        if counts.is_empty() {
            return Err(GroupError::Invalid("empty cycle type".into()));
        }
        Ok(CycleType { counts })
    }

    pub fn from_lengths(lengths: &[u64]) -> Self {
        Self::from_counts(lengths.iter().map(|&l| (l, 1))).expect("nonempty positive lengths")
    }

    pub fn identity(n: u64) -> Self {
        Self::from_counts([(1, n)]).expect("n >= 1")
    }

    pub fn of(g: &Perm) -> Self {
        g.cycle_type()
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn count(&self, len: u64) -> u64 {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.counts.iter().map(|(l, c)| l * c).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.counts.keys().all(|&l| l == 1)
    }

    /// Order of any element of this type: lcm of the cycle lengths.
    pub fn element_order(&self) -> u64 {
        self.counts.keys().fold(1u64, |acc, &l| acc.lcm(&l))
    }

    pub fn is_even(&self) -> bool {
        // a cycle of even length is an odd permutation
        self.counts
            .iter()
            .filter(|(l, _)| *l % 2 == 0)
            .map(|(_, c)| c)
            .sum::<u64>()
            % 2
            == 0
    }

    /// Cycle type of `g^a` for `g` of this type.
    pub fn power(&self, a: u64) -> Self {
        assert!(a >= 1, "exponent must be positive");
        let mut out: BTreeMap<u64, u64> = BTreeMap::new();
        for (&l, &c) in &self.counts {
            let g = l.gcd(&a);
            *out.entry(l / g).or_insert(0) += c * g;
        }
        CycleType { counts: out }
    }

    /// Whether the S_n class of this even type splits into two A_n classes:
    /// all cycle lengths odd and pairwise distinct.
    pub fn an_class_splits(&self) -> Result<bool, GroupError> {
        if !self.is_even() {
            return Err(GroupError::Invalid(format!("[{self}] is not an even type")));
        }
        Ok(self.degree() > 1 && self.counts.iter().all(|(l, c)| l % 2 == 1 && *c == 1))
    }

    /// Lengths with multiplicity, increasing.
    pub fn lengths(&self) -> Vec<u64> {
        self.counts
            .iter()
            .flat_map(|(&l, &c)| std::iter::repeat_n(l, c as usize))
            .collect()
    }

    /// Representative with consecutive cycles laid out in increasing length.
    pub fn canonical_representative(&self) -> Result<Perm, GroupError> {
        let n = self.degree() as usize;
        if n > super::perm::MAX_PERM_DEGREE {
            return Err(GroupError::TooLarge(format!(
                "representative of degree {n} is not materialized"
            )));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0usize;
        for l in self.lengths() {
            let l = l as usize;
            for i in 0..l {
                images[start + i] = start + (i + 1) % l;
            }
            start += l;
        }
        Perm::from_images(images)
    }

    /// Number of elements of S_n with this type, if it fits in u128.
    pub fn class_size_in_sn(&self) -> Option<u128> {
        let n = self.degree();
        let mut size: u128 = 1;
        for k in 2..=n as u128 {
            size = size.checked_mul(k)?;
        }
        for (&l, &c) in &self.counts {
            let mut denom: u128 = 1;
            for k in 1..=c as u128 {
                denom = denom.checked_mul(k)?.checked_mul(l as u128)?;
            }
            size /= denom;
        }
        Some(size)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(l, c)| format!("{l}^{c}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for CycleType {
    type Err = GroupError;

    /// Accepts `"1^3 2^1"`, `"[2 3]"` (bare lengths) and mixtures.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        if s.len() > MAX_CYCLE_TYPE_LEN {
            return Err(GroupError::Parse("cycle type string too long".into()));
        }
        let t = s.trim();
        let t = t.strip_prefix('[').unwrap_or(t);
        let t = t.strip_suffix(']').unwrap_or(t);
        let mut pairs = Vec::new();
        for tok in t.split(|c: char| c.is_whitespace() || c == ',').filter(|x| !x.is_empty()) {
            let (l, c) = match tok.split_once('^') {
                Some((l, c)) => (l, c),
                None => (tok, "1"),
            };
            let parse = |x: &str| {
                x.parse::<u64>()
                    .map_err(|_| GroupError::Parse(format!("bad cycle type token {tok:?}")))
            };
            pairs.push((parse(l)?, parse(c)?));
        }
        Self::from_counts(pairs).map_err(|e| GroupError::Parse(e.to_string()))
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycleType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(ct("1^3 2^1").to_string(), "1^3 2^1");
        assert_eq!(ct("[2 3]"), ct("2^1 3^1"));
        assert_eq!(ct("5").degree(), 5);
        assert_eq!(ct("1^604798 2^1").degree(), 604800);
        assert!("0^2".parse::<CycleType>().is_err());
        assert!("x".parse::<CycleType>().is_err());
        assert!("".parse::<CycleType>().is_err());
        assert!("18446744073709551615^2".parse::<CycleType>().is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(ct("5^1").power(2), ct("5^1"));
        assert_eq!(ct("2^1 3^1").power(2), ct("1^2 3^1"));
        assert_eq!(ct("2^1 3^1").power(3), ct("1^3 2^1"));
        assert_eq!(ct("2^1 3^1").power(6), ct("1^5"));
    }

    #[test]
    fn splitting() {
        assert!(ct("5^1").an_class_splits().unwrap());
        assert!(!ct("1^2 3^1").an_class_splits().unwrap());
        assert!(ct("1^1 3^1 5^1").an_class_splits().unwrap());
        assert!(ct("1^3 2^1").an_class_splits().is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(ct("1^3 2^1").class_size_in_sn(), Some(10));
        assert_eq!(ct("5^1").class_size_in_sn(), Some(24));
        assert_eq!(ct("2^1 3^1").class_size_in_sn(), Some(20));
    }
}
