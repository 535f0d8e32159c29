//! Split conjugacy classes of A_n.
//!
//! An S_n class of even type splits in A_n exactly when its cycle lengths are
//! odd and pairwise distinct. Tag 1 is, by convention, the A_n class of
//! [`CycleType::canonical_representative`]; tag 2 is the other one.

use num_bigint::BigInt;
use num_traits::One;

use super::{CycleType, GroupError, Perm};
use crate::algebra::jacobi;

/// Degree bound for [`conjugate_in_an`].
pub const MAX_AN_CONJUGACY_DEGREE: usize = 12;

/// Some `x` with `g.conjugate_by(x) == h`, built by lining up cycles of equal
/// length. `None` when the cycle types differ.
pub(crate) fn s_n_conjugator(g: &Perm, h: &Perm) -> Option<Perm> {
    if g.degree() != h.degree() || g.cycle_type() != h.cycle_type() {
        return None;
    }
    let n = g.degree();
    let full = |p: &Perm| {
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = p.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = p.apply(x);
            }
            cycles.push(c);
        }
        cycles.sort_by_key(|c| c.len());
        cycles
    };
    let mut images = vec![0usize; n];
    for (cg, ch) in full(g).iter().zip(full(h).iter()) {
        for (a, b) in cg.iter().zip(ch.iter()) {
            images[*a] = *b;
        }
    }
    Some(Perm::from_images(images).expect("bijection by construction"))
}

/// Whether the even permutations `g` and `h` are conjugate in A_n.
pub fn conjugate_in_an(g: &Perm, h: &Perm) -> Result<bool, GroupError> {
    if g.degree() > MAX_AN_CONJUGACY_DEGREE || h.degree() > MAX_AN_CONJUGACY_DEGREE {
        return Err(GroupError::TooLarge(format!(
            "A_n conjugacy is decided up to degree {MAX_AN_CONJUGACY_DEGREE}"
        )));
    }
    if !g.is_even() || !h.is_even() {
        return Err(GroupError::Invalid("both permutations must be even".into()));
    }
    Ok(an_conjugate_unchecked(g, h))
}

fn an_conjugate_unchecked(g: &Perm, h: &Perm) -> bool {
    let Some(x) = s_n_conjugator(g, h) else {
        return false;
    };
    // The centralizer of a split-type element is generated by its (odd
    // length, hence even) cycles, so the parity of any conjugator decides.
    !g.cycle_type().an_class_splits().unwrap_or(false) || x.is_even()
}

/// A_n class tag of an even permutation: `None` if its class does not split.
pub fn split_tag(g: &Perm) -> Result<Option<u8>, GroupError> {
    if !g.is_even() {
        return Err(GroupError::Invalid(format!("{g} is odd")));
    }
    let ct = g.cycle_type();
    if !ct.an_class_splits()? {
        return Ok(None);
    }
    let rep = ct.canonical_representative()?;
    Ok(Some(if an_conjugate_unchecked(&rep, g) { 1 } else { 2 }))
}

/// Representative of the A_n class with the given type and tag.
pub fn an_representative(ct: &CycleType, tag: Option<u8>) -> Result<Perm, GroupError> {
    let rep = ct.canonical_representative()?;
    match tag {
        None | Some(1) => Ok(rep),
        Some(2) => {
            let n = rep.degree();
            let t = Perm::from_cycles(n, &[&[0, 1]])?;
            Ok(rep.conjugate_by(&t))
        }
        Some(t) => Err(GroupError::Invalid(format!("split tag {t} is not 1 or 2"))),
    }
}

/// Whether `a` coprime to the element order can move a split class to the
/// other tag. `g^a` stays in the class of `g` iff the Jacobi symbol of `a`
/// modulo the product of the cycle lengths is 1; that character is trivial
/// exactly when the product is a perfect square.
pub(crate) fn split_class_is_real_rational(ct: &CycleType) -> bool {
    let prod = ct
        .lengths()
        .into_iter()
        .fold(BigInt::one(), |acc, l| acc * BigInt::from(l));
    let r = prod.sqrt();
    &r * &r == prod
}

/// Tag of `g^a` for `g` in the split class `(ct, tag)`, `a` coprime to its order.
pub(crate) fn power_tag(ct: &CycleType, tag: u8, a: u64) -> u8 {
    let sign: i8 = ct.lengths().into_iter().map(|l| jacobi(a, l)).product();
    if sign == 1 {
        tag
    } else {
        3 - tag
    }
}
