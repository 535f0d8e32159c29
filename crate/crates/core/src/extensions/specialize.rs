//! Specializations `E_t0 / Q` at rational non-branch points: the splitting
//! field of `P(t0, Y)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::{ExtensionDescriptor, ExtensionError, Locus};
use crate::algebra::{
    discriminant, factor_degree_pattern_mod_p, factor_small, format_rational, is_square_rational,
    primes_up_to, rational_roots, sturm_real_root_count, AlgebraError, RatPoly, Rational,
};
use crate::numbertheory::{squarefree_kernel_rational, SquarefreeInt};

/// Primes used for the factor-pattern census of degree >= 5 specializations.
pub const DEFAULT_CENSUS_BOUND: u64 = 500;

/// Galois groups of splitting fields of separable polynomials of degree <= 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SmallGaloisGroup {
    Trivial,
    C2,
    C3,
    S3,
    C4,
    V4,
    D4,
    A4,
    S4,
}

impl SmallGaloisGroup {
    pub fn order(&self) -> u64 {
        match self {
            SmallGaloisGroup::Trivial => 1,
            SmallGaloisGroup::C2 => 2,
            SmallGaloisGroup::C3 => 3,
            SmallGaloisGroup::S3 => 6,
            SmallGaloisGroup::C4 | SmallGaloisGroup::V4 => 4,
            SmallGaloisGroup::D4 => 8,
            SmallGaloisGroup::A4 => 12,
            SmallGaloisGroup::S4 => 24,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternCensus {
    pub bound: u64,
    pub primes_used: u64,
    /// Factor-degree pattern (like "1 1 3") to number of primes.
    pub patterns: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpecializationResult {
    #[serde(serialize_with = "ser_rational")]
    pub t0: Rational,
    /// `P(t0, Y)`.
    pub polynomial: RatPoly,
    pub separable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadratic_kernel: Option<SquarefreeInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cubic_group: Option<SmallGaloisGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quartic_group: Option<SmallGaloisGroup>,
    pub real_roots: usize,
    pub totally_real: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_pattern_census: Option<PatternCensus>,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

fn non_separable(t0: &Rational, why: String) -> ExtensionError {
    ExtensionError::NonSeparable(format!("t0 = {}: {why}", format_rational(t0)))
}

/// Checks that `t0` is a good specialization point and returns `P(t0, Y)`.
fn specialized_poly(e: &ExtensionDescriptor, t0: &Rational) -> Result<RatPoly, ExtensionError> {
    let p = e.defining_poly().ok_or_else(|| {
        ExtensionError::Unsupported(format!("{} has no defining polynomial", e.label()))
    })?;
    for o in e.orbits() {
        let hit = match &o.locus {
            Locus::Poly(m) => m.eval(t0).is_zero(),
            Locus::Zero => t0.is_zero(),
            _ => false,
        };
        if hit {
            return Err(non_separable(t0, format!("branch point ({})", o.locus)));
        }
    }
    let f = p.specialize(t0);
    if f.degree() != p.degree_y() {
        return Err(non_separable(t0, "the leading coefficient vanishes".into()));
    }
    let disc = discriminant(f.coeffs()).expect("degree >= 1");
    if disc.is_zero() {
        return Err(non_separable(t0, format!("{f} is not separable")));
    }
    Ok(f)
}

fn disc_of(f: &RatPoly) -> Rational {
    discriminant(f.coeffs()).expect("degree >= 1")
}

fn cubic_group(f: &RatPoly) -> Result<SmallGaloisGroup, AlgebraError> {
    Ok(match rational_roots(f)?.len() {
        0 if is_square_rational(&disc_of(f)) => SmallGaloisGroup::C3,
        0 => SmallGaloisGroup::S3,
        1 => SmallGaloisGroup::C2,
        _ => SmallGaloisGroup::Trivial,
    })
}

fn quadratic_group(f: &RatPoly) -> SmallGaloisGroup {
    if is_square_rational(&disc_of(f)) {
        SmallGaloisGroup::Trivial
    } else {
        SmallGaloisGroup::C2
    }
}

/// Whether `x^2 + b x + c` splits over `Q(sqrt delta)`.
fn splits_over(b: &Rational, c: &Rational, delta: &Rational) -> bool {
    let d = b * b - Rational::from_integer(4.into()) * c;
    d.is_zero() || is_square_rational(&d) || is_square_rational(&(d * delta))
}

fn quartic_group(f: &RatPoly) -> Result<SmallGaloisGroup, AlgebraError> {
    let factors = factor_small(f)?;
    let degrees: Vec<usize> = factors.iter().map(|g| g.degree().unwrap_or(0)).collect();
    match degrees.as_slice() {
        [1, 1, 1, 1] => return Ok(SmallGaloisGroup::Trivial),
        [1, 1, 2] => return Ok(SmallGaloisGroup::C2),
        [1, 3] => return cubic_group(&factors[1]),
        [2, 2] => {
            let k1 = squarefree_kernel_rational(&disc_of(&factors[0]))
                .map_err(|e| AlgebraError::Domain(e.to_string()))?;
            let k2 = squarefree_kernel_rational(&disc_of(&factors[1]))
                .map_err(|e| AlgebraError::Domain(e.to_string()))?;
            return Ok(if k1 == k2 {
                SmallGaloisGroup::C2
            } else {
                SmallGaloisGroup::V4
            });
        }
        [4] => {}
        other => {
            return Err(AlgebraError::Domain(format!(
                "unexpected factor degrees {other:?} for a separable quartic"
            )))
        }
    }
    let m = f.monic();
    let (a, b, c, d) = (m.coeff(3), m.coeff(2), m.coeff(1), m.coeff(0));
    let four = Rational::from_integer(4.into());
    let resolvent = RatPoly::new(vec![
        -(&a * &a * &d - &four * &b * &d + &c * &c),
        &a * &c - &four * &d,
        -b.clone(),
        Rational::from_integer(1.into()),
    ]);
    let delta = disc_of(&m);
    let roots = rational_roots(&resolvent)?;
    Ok(match roots.len() {
        0 if is_square_rational(&delta) => SmallGaloisGroup::A4,
        0 => SmallGaloisGroup::S4,
        1 => {
            let r = &roots[0];
            if splits_over(&-r.clone(), &d, &delta) && splits_over(&a, &(&b - r), &delta) {
                SmallGaloisGroup::C4
            } else {
                SmallGaloisGroup::D4
            }
        }
        _ => SmallGaloisGroup::V4,
    })
}

fn census(f: &RatPoly, bound: u64) -> Result<PatternCensus, AlgebraError> {
    let mut patterns: BTreeMap<String, u64> = BTreeMap::new();
    let mut used = 0;
    for p in primes_up_to(bound) {
        match factor_degree_pattern_mod_p(f, p) {
            Ok(pat) => {
                used += 1;
                let key: Vec<String> = pat.iter().map(|d| d.to_string()).collect();
                *patterns.entry(key.join(" ")).or_insert(0) += 1;
            }
            Err(AlgebraError::Excluded(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(PatternCensus {
        bound,
        primes_used: used,
        patterns,
    })
}

/// The Galois group of a separable polynomial of degree at most 4.
pub fn small_galois_group(f: &RatPoly) -> Result<SmallGaloisGroup, AlgebraError> {
    match f.degree() {
        Some(1) => Ok(SmallGaloisGroup::Trivial),
        Some(2) => Ok(quadratic_group(f)),
        Some(3) => cubic_group(f),
        Some(4) => quartic_group(f),
        _ => Err(AlgebraError::Domain(format!(
            "Galois groups are computed up to degree 4, not for {f}"
        ))),
    }
}

pub fn specialize(e: &ExtensionDescriptor, t0: &Rational) -> Result<SpecializationResult, ExtensionError> {
    specialize_with(e, t0, DEFAULT_CENSUS_BOUND)
}

pub fn specialize_with(
    e: &ExtensionDescriptor,
    t0: &Rational,
    census_bound: u64,
) -> Result<SpecializationResult, ExtensionError> {
    let f = specialized_poly(e, t0)?;
    let n = f.degree().expect("nonconstant");
    let real_roots = sturm_real_root_count(&f)?;
    let mut out = SpecializationResult {
        t0: t0.clone(),
        polynomial: f.clone(),
        separable: true,
        quadratic_kernel: None,
        cubic_group: None,
        quartic_group: None,
        real_roots,
        totally_real: real_roots == n,
        degree_pattern_census: None,
    };
    match n {
        2 => out.quadratic_kernel = Some(squarefree_kernel_rational(&disc_of(&f))?),
        3 => out.cubic_group = Some(cubic_group(&f)?),
        4 => out.quartic_group = Some(quartic_group(&f)?),
        n if n >= 5 => out.degree_pattern_census = Some(census(&f, census_bound)?),
        _ => {}
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio, BiPoly};
    use crate::extensions::{builders, FieldKind};
    use crate::groups::{ClassLabel, Group};
    use crate::extensions::BranchOrbit;

    #[test]
    fn quadratic_kernel() {
        let e = builders::sqrt(&RatPoly::t()).unwrap();
        let s = specialize(&e, &int(3)).unwrap();
        assert_eq!(s.quadratic_kernel.unwrap().value(), &3.into());
        let s = specialize(&e, &ratio(-8, 9)).unwrap();
        assert_eq!(s.quadratic_kernel.unwrap().value(), &(-2).into());
        assert!(matches!(specialize(&e, &int(0)), Err(ExtensionError::NonSeparable(_))));
    }

    #[test]
    fn cubic_examples() {
        let e = builders::cubic_example().unwrap();
        let s = specialize(&e, &int(2)).unwrap();
        assert_eq!(s.cubic_group, Some(SmallGaloisGroup::S3));
        assert!(!s.totally_real);
        assert_eq!(disc_of(&s.polynomial), int(-688));
        for t in [int(1), int(-1), int(2), int(-2), int(3), int(-3), ratio(1, 2), ratio(-1, 2)] {
            assert!(!specialize(&e, &t).unwrap().totally_real);
        }

        // Y^3 + T Y + T is inseparable at t = -27/4
        let g = Group::Symmetric(3);
        let e = ExtensionDescriptor::new(
            "Y^3 + T Y + T",
            g,
            FieldKind::RationalsQ,
            vec![BranchOrbit::at(
                crate::extensions::Locus::Poly(RatPoly::from_ints(&[27, 4]).monic()),
                ClassLabel::sn_str("1^1 2^1").unwrap(),
            )],
            Some(BiPoly::new(vec![RatPoly::t(), RatPoly::t(), RatPoly::zero(), RatPoly::one()])),
        )
        .unwrap();
        assert!(matches!(
            specialize(&e, &ratio(-27, 4)),
            Err(ExtensionError::NonSeparable(_))
        ));
    }

    #[test]
    fn cubic_groups_against_known_answers() {
        let cases: [(&[i64], SmallGaloisGroup); 5] = [
            (&[1, -3, 0, 1], SmallGaloisGroup::C3),
            (&[-2, 0, 0, 1], SmallGaloisGroup::S3),
            (&[-1, 1, -1, 1], SmallGaloisGroup::C2),
            (&[-6, 11, -6, 1], SmallGaloisGroup::Trivial),
            (&[1, -2, -1, 1], SmallGaloisGroup::C3),
        ];
        for (c, g) in cases {
            assert_eq!(small_galois_group(&RatPoly::from_ints(c)).unwrap(), g, "{c:?}");
        }
    }

    #[test]
    fn quartic_groups_against_known_answers() {
        let cases: [(&[i64], SmallGaloisGroup); 8] = [
            (&[1, 1, 1, 1, 1], SmallGaloisGroup::C4),
            (&[-2, 0, 0, 0, 1], SmallGaloisGroup::D4),
            (&[1, 0, 0, 0, 1], SmallGaloisGroup::V4),
            (&[1, 1, 0, 0, 1], SmallGaloisGroup::S4),
            (&[12, 8, 0, 0, 1], SmallGaloisGroup::A4),
            (&[1, 0, -10, 0, 1], SmallGaloisGroup::V4),
            (&[6, 0, -5, 0, 1], SmallGaloisGroup::V4),
            (&[-2, 0, 1, 0, 1], SmallGaloisGroup::C2),
        ];
        for (c, g) in cases {
            assert_eq!(small_galois_group(&RatPoly::from_ints(c)).unwrap(), g, "{c:?}");
        }
        // (x^2 - 2)(x^2 - 8) generates one quadratic field
        let f = &RatPoly::from_ints(&[-2, 0, 1]) * &RatPoly::from_ints(&[-8, 0, 1]);
        assert_eq!(small_galois_group(&f).unwrap(), SmallGaloisGroup::C2);
    }

    #[test]
    fn morse_census_patterns_are_cycle_types() {
        let e = builders::morse(&RatPoly::from_ints(&[0, 1, 0, 0, 0, 1])).unwrap();
        let s = specialize_with(&e, &int(3), 200).unwrap();
        let c = s.degree_pattern_census.unwrap();
        assert!(c.primes_used > 30);
        let ok = ["1 1 1 1 1", "1 1 1 2", "1 2 2", "1 1 3", "2 3", "1 4", "5"];
        assert!(c.patterns.keys().all(|k| ok.contains(&k.as_str())));
    }

    #[test]
    fn needs_a_defining_polynomial() {
        let e = builders::cyclotomic_realization(5).unwrap();
        assert!(matches!(specialize(&e, &int(2)), Err(ExtensionError::Unsupported(_))));
    }
}
