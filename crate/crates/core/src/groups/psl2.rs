//! PSL_2(F_p) acting on the projective line.

use super::{GroupError, Perm, PermGroup};
use crate::algebra::is_prime_u64;

/// PSL_2(F_p) on the p + 1 points of P^1(F_p), with infinity numbered p,
/// generated by `x -> x + 1` and `x -> -1/x`. Restricted to 5 <= p <= 13.
pub fn psl2_group(p: u64) -> Result<PermGroup, GroupError> {
    if !(5..=13).contains(&p) || !is_prime_u64(p) {
        return Err(GroupError::OutOfRange(format!(
            "PSL2(p) is built for primes 5 <= p <= 13, got {p}"
        )));
    }
    let p = p as usize;
    let inf = p;
    let inv = |x: usize| (1..p).find(|y| x * y % p == 1).expect("field inverse");
    let t: Vec<usize> = (0..=p).map(|x| if x == inf { inf } else { (x + 1) % p }).collect();
    let s: Vec<usize> = (0..=p)
        .map(|x| match x {
            0 => inf,
            _ if x == inf => 0,
            _ => (p - inv(x)) % p,
        })
        .collect();
    let g = PermGroup::new(p + 1, vec![Perm::from_images(t)?, Perm::from_images(s)?])?;
    let expected = (p * (p * p - 1) / 2) as u128;
    if g.order() != expected {
        return Err(GroupError::Invalid(format!(
            "generated group has order {}, expected {expected}",
            g.order()
        )));
    }
    Ok(g)
}
