//! The Riemann-Hurwitz lower bound `2g >= 2 + N (r/2 - 2)`.

use serde::Serialize;

use super::{ExtensionDescriptor, ExtensionError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusBound {
    pub degree: u128,
    pub branch_points: u64,
    /// Lower bound for 2g, possibly negative.
    pub two_g_at_least: i128,
    pub genus_at_least: u128,
}

/// From `[E : Q(T)] = degree` and `r` branch points. Each branch point
/// contributes at least `degree / 2` to the ramification divisor.
pub fn riemann_hurwitz_bound(degree: u128, r: u64) -> GenusBound {
    let n = degree as i128;
    // 2 + n(r/2 - 2) = 2 + n(r - 4)/2, rounded up
    let num = n * (r as i128 - 4);
    let two_g = 2 - (-num).div_euclid(2);
    let genus = if two_g <= 0 { 0 } else { (two_g as u128).div_ceil(2) };
    GenusBound {
        degree,
        branch_points: r,
        two_g_at_least: two_g,
        genus_at_least: genus,
    }
}

pub fn genus_lower_bound(e: &ExtensionDescriptor) -> Result<GenusBound, ExtensionError> {
    let degree = e.group().order().ok_or_else(|| {
        ExtensionError::Unsupported(format!("order of {} is not available", e.group().name()))
    })?;
    Ok(riemann_hurwitz_bound(degree, e.branch_point_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::builders;

    #[test]
    fn examples() {
        let b = riemann_hurwitz_bound(6, 5);
        assert_eq!((b.two_g_at_least, b.genus_at_least), (5, 3));
        assert_eq!(riemann_hurwitz_bound(6, 4).genus_at_least, 1);
        assert_eq!(riemann_hurwitz_bound(6, 2).genus_at_least, 0);
        assert!(riemann_hurwitz_bound(6, 2).two_g_at_least < 0);
        // r >= 5 forces genus at least 2 once the degree is at least 2
        for n in 2..50u128 {
            assert!(riemann_hurwitz_bound(n, 5).genus_at_least >= 2);
        }
    }

    #[test]
    fn cubic_example_has_genus_zero_bound() {
        let e = builders::cubic_example().unwrap();
        assert_eq!(genus_lower_bound(&e).unwrap().genus_at_least, 0);
    }
}
