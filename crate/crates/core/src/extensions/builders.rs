//! Descriptors of the regular realizations used as comparison extensions.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{BranchOrbit, ExtensionDescriptor, ExtensionError, FieldKind, Locus};
use crate::algebra::{
    critical_values_poly, cyclotomic, factor_small, irreducibility, BiPoly, RatPoly, Rational,
};
use crate::groups::{ClassLabel, CycleType, Group, PermGroup};

fn z2() -> (Group, ClassLabel) {
    let g = PermGroup::cyclic(2);
    let inv = ClassLabel::explicit(g.generators()[0].clone());
    (Group::Perm(g), inv)
}

fn ct(pairs: &[(u64, u64)]) -> CycleType {
    CycleType::from_counts(pairs.iter().copied()).expect("valid cycle type")
}

fn locus_of(factor: &RatPoly) -> Locus {
    let m = factor.monic();
    if m == RatPoly::t() {
        Locus::Zero
    } else {
        Locus::Poly(m)
    }
}

fn check_squarefree(p: &RatPoly) -> Result<usize, ExtensionError> {
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return Err(ExtensionError::Invalid(format!("{p} is constant")));
    }
    if !p.is_squarefree() {
        return Err(ExtensionError::Invalid(format!(
            "{p} has a repeated factor; pass its squarefree part {}",
            p.squarefree_part()?
        )));
    }
    Ok(d)
}

fn sqrt_descriptor(p: &RatPoly, factors: Vec<RatPoly>) -> Result<ExtensionDescriptor, ExtensionError> {
    let (group, inv) = z2();
    let mut orbits: Vec<BranchOrbit> = factors
        .iter()
        .map(|f| BranchOrbit::at(locus_of(f), inv.clone()))
        .collect();
    if p.degree().unwrap_or(0) % 2 == 1 {
        orbits.push(BranchOrbit::at(Locus::Infinity, inv));
    }
    let y_poly = BiPoly::new(vec![-p, RatPoly::zero(), RatPoly::one()]);
    ExtensionDescriptor::new(
        format!("Q(T)(sqrt({p}))"),
        group,
        FieldKind::RationalsQ,
        orbits,
        Some(y_poly),
    )
}

/// `k(T)(sqrt P)` for squarefree nonconstant `P`. The branch points are the
/// roots of `P`, plus infinity when `deg P` is odd. Factoring is exact up
/// to degree 4; beyond that use [`sqrt_factored`].
pub fn sqrt(p: &RatPoly) -> Result<ExtensionDescriptor, ExtensionError> {
    check_squarefree(p)?;
    let factors = factor_small(p)?;
    sqrt_descriptor(p, factors)
}

/// As [`sqrt`], with the irreducible factorization supplied; each factor
/// must carry an irreducibility certificate.
pub fn sqrt_factored(factors: &[RatPoly]) -> Result<ExtensionDescriptor, ExtensionError> {
    if factors.is_empty() {
        return Err(ExtensionError::Invalid("no factors given".into()));
    }
    let mut p = RatPoly::one();
    for f in factors {
        let cert = irreducibility(f)?;
        if !cert.is_irreducible() {
            return Err(ExtensionError::Invalid(format!("{f} is not certified irreducible: {cert:?}")));
        }
        p = &p * f;
    }
    check_squarefree(&p)?;
    sqrt_descriptor(&p, factors.to_vec())
}

/// Positive `(q, s)` with `s(n - m) - qn = 1`, smallest `s` first.
pub fn trinomial_params(n: u64, m: u64) -> Option<(u64, u64)> {
    if n < 2 || m == 0 || m >= n || m.gcd(&n) != 1 {
        return None;
    }
    let k = (n - m) as i128;
    let nn = n as i128;
    // s = k^-1 mod n
    let ext = k.extended_gcd(&nn);
    let mut s = ext.x.rem_euclid(nn);
    if s == 0 {
        s = nn;
    }
    let mut q = (s * k - 1) / nn;
    if q == 0 {
        s += nn;
        q = (s * k - 1) / nn;
    }
    Some((q as u64, s as u64))
}

/// The rational branch point `m^m (n-m)^(n-m) / n^n` of the trinomial family.
pub fn trinomial_branch_point(n: u64, m: u64) -> Rational {
    let pow = |b: u64, e: u64| num_bigint::BigInt::from(b).pow(e as u32);
    Rational::new(pow(m, m) * pow(n - m, n - m), pow(n, n))
}

/// Largest n for which trinomial and Morse builders write out a defining polynomial.
pub const MAX_EXPLICIT_DEGREE: u64 = 64;

/// `Y^n - T^q Y^m + T^s` with group S_n: 0 carries `[m^1 (n-m)^1]`,
/// infinity carries `[n^1]` and `m^m (n-m)^(n-m) / n^n` carries a transposition.
/// `T^e Y^m` without unit exponents.
fn mono(e: u64, m: Option<u64>) -> String {
    let t = if e == 1 { "T".to_string() } else { format!("T^{e}") };
    match m {
        Some(1) => format!("{t} Y"),
        Some(m) => format!("{t} Y^{m}"),
        None => t,
    }
}

pub fn trinomial(n: u64, m: u64, q: u64, s: u64) -> Result<ExtensionDescriptor, ExtensionError> {
    if n < 3 || m == 0 || m > n || q == 0 || s == 0 {
        return Err(ExtensionError::Invalid(format!(
            "need n >= 3 and 1 <= m <= n, q, s >= 1; got n={n}, m={m}, q={q}, s={s}"
        )));
    }
    if m.gcd(&n) != 1 {
        return Err(ExtensionError::Invalid(format!("gcd({m}, {n}) != 1")));
    }
    if (s as i128) * ((n - m) as i128) - (q as i128) * (n as i128) != 1 {
        return Err(ExtensionError::Invalid(format!(
            "s(n-m) - qn = {} != 1",
            (s as i128) * ((n - m) as i128) - (q as i128) * (n as i128)
        )));
    }
    let b = trinomial_branch_point(n, m);
    let orbits = vec![
        BranchOrbit::at(Locus::Zero, ClassLabel::sn(ct(&[(m, 1), (n - m, 1)]))),
        BranchOrbit::at(Locus::Infinity, ClassLabel::sn(ct(&[(n, 1)]))),
        BranchOrbit::at(
            Locus::Poly(RatPoly::linear_root(&b)),
            ClassLabel::sn(ct(&[(1, n - 2), (2, 1)])),
        ),
    ];
    let poly = if n <= MAX_EXPLICIT_DEGREE && q <= MAX_EXPLICIT_DEGREE && s <= MAX_EXPLICIT_DEGREE {
        let mut coeffs = vec![RatPoly::zero(); n as usize + 1];
        coeffs[0] = RatPoly::monomial(Rational::one(), s as usize);
        coeffs[m as usize] = RatPoly::monomial(-Rational::one(), q as usize);
        coeffs[n as usize] = RatPoly::one();
        Some(BiPoly::new(coeffs))
    } else {
        None
    };
    ExtensionDescriptor::new(
        format!("Y^{n} - {} + {}", mono(q, Some(m)), mono(s, None)),
        Group::Symmetric(n),
        FieldKind::RationalsQ,
        orbits,
        poly,
    )
}

/// [`trinomial`] with the smallest admissible `(q, s)`.
pub fn trinomial_for(n: u64, m: u64) -> Result<ExtensionDescriptor, ExtensionError> {
    let (q, s) = trinomial_params(n, m)
        .ok_or_else(|| ExtensionError::Invalid(format!("no trinomial for n={n}, m={m}")))?;
    trinomial(n, m, q, s)
}

/// `M(Y) - T` for a Morse polynomial `M` of degree n >= 3: group S_n,
/// `[n^1]` at infinity and a transposition at each critical value.
pub fn morse(m: &RatPoly) -> Result<ExtensionDescriptor, ExtensionError> {
    let n = match m.degree() {
        Some(d) if d >= 3 => d as u64,
        _ => return Err(ExtensionError::NotMorse(format!("{m} has degree below 3"))),
    };
    if !m.leading().is_one() {
        return Err(ExtensionError::NotMorse(format!("{m} is not monic")));
    }
    let dm = m.derivative();
    if !dm.is_squarefree() {
        return Err(ExtensionError::NotMorse(format!(
            "the derivative {dm} has a repeated root"
        )));
    }
    let cv = critical_values_poly(m)?;
    if !cv.is_squarefree() {
        return Err(ExtensionError::NotMorse(format!(
            "two critical points share a critical value (critical values are the roots of {cv})"
        )));
    }
    let transposition = ClassLabel::sn(ct(&[(1, n - 2), (2, 1)]));
    let mut orbits: Vec<BranchOrbit> = factor_small(&cv)?
        .iter()
        .map(|f| BranchOrbit::at(locus_of(f), transposition.clone()))
        .collect();
    orbits.push(BranchOrbit::at(Locus::Infinity, ClassLabel::sn(ct(&[(n, 1)]))));
    let mut coeffs: Vec<RatPoly> = m.coeffs().iter().cloned().map(RatPoly::constant).collect();
    coeffs[0] = &coeffs[0] - &RatPoly::t();
    ExtensionDescriptor::new(
        format!("{} - T", m.to_string().replace('T', "Y")),
        Group::Symmetric(n),
        FieldKind::RationalsQ,
        orbits,
        Some(BiPoly::new(coeffs)),
    )
}

/// Class data of a degree-n Morse realization when n is too large to write
/// the polynomial down: n - 1 unrecorded transposition points and `[n^1]` at infinity.
pub fn morse_data(n: u64) -> Result<ExtensionDescriptor, ExtensionError> {
    if n < 3 {
        return Err(ExtensionError::Invalid(format!("Morse data needs n >= 3, got {n}")));
    }
    ExtensionDescriptor::new(
        format!("Morse realization of S{n}"),
        Group::Symmetric(n),
        FieldKind::RationalsQ,
        vec![
            BranchOrbit::new(
                Locus::Unspecified(n - 1),
                ClassLabel::sn(ct(&[(1, n - 2), (2, 1)])),
                false,
            ),
            BranchOrbit::at(Locus::Infinity, ClassLabel::sn(ct(&[(n, 1)]))),
        ],
        None,
    )
}

/// Z/n with branch points the primitive n-th roots of unity.
pub fn cyclotomic_realization(n: u64) -> Result<ExtensionDescriptor, ExtensionError> {
    if !(3..=crate::groups::MAX_PERM_DEGREE as u64).contains(&n) {
        return Err(ExtensionError::Invalid(format!(
            "cyclotomic realization needs 3 <= n <= {}, got {n}",
            crate::groups::MAX_PERM_DEGREE
        )));
    }
    let g = PermGroup::cyclic(n as usize);
    let gen = ClassLabel::explicit(g.generators()[0].clone());
    ExtensionDescriptor::new(
        format!("Z/{n} branched at the roots of Phi_{n}"),
        Group::Perm(g),
        FieldKind::RationalsQ,
        vec![BranchOrbit::at(Locus::Poly(cyclotomic(n)), gen)],
        None,
    )
}

/// Splitting field of `Y^3 + T^2 Y + T^2`. With `Y = TZ` it becomes
/// `Z^3 + Z + 1/T`, separable at `T = infinity`, so the branch points are 0
/// (a 3-cycle) and the roots of `4T^2 + 27` (transpositions).
pub fn cubic_example() -> Result<ExtensionDescriptor, ExtensionError> {
    let t2 = RatPoly::from_ints(&[0, 0, 1]);
    let poly = BiPoly::new(vec![t2.clone(), t2, RatPoly::zero(), RatPoly::one()]);
    ExtensionDescriptor::new(
        "Y^3 + T^2 Y + T^2",
        Group::Symmetric(3),
        FieldKind::RationalsQ,
        vec![
            BranchOrbit::at(Locus::Zero, ClassLabel::sn(ct(&[(3, 1)]))),
            BranchOrbit::at(
                Locus::Poly(RatPoly::new(vec![Rational::new(27.into(), 4.into()), Rational::zero(), Rational::one()])),
                ClassLabel::sn(ct(&[(1, 1), (2, 1)])),
            ),
        ],
        Some(poly),
    )
}

fn rational_points(
    label: String,
    group: Group,
    classes: Vec<(ClassLabel, bool)>,
) -> Result<ExtensionDescriptor, ExtensionError> {
    let orbits = classes
        .into_iter()
        .map(|(c, r)| BranchOrbit::new(Locus::Unspecified(1), c, r))
        .collect();
    ExtensionDescriptor::new(label, group, FieldKind::RationalsQ, orbits, None)
}

/// Class data of a realization with one orbit per listed class, each a
/// single unrecorded point with the given rationality.
pub fn class_data(
    label: &str,
    group: Group,
    classes: Vec<(ClassLabel, bool)>,
) -> Result<ExtensionDescriptor, ExtensionError> {
    rational_points(label.to_string(), group, classes)
}

/// S_n (n >= 6 even) with four rational branch points and classes
/// `[1^2 (n-2)^1], [1^(n-3) 3^1], [2^(n/2)], [1^2 2^((n-2)/2)]`.
pub fn sn_four_point_data(n: u64) -> Result<ExtensionDescriptor, ExtensionError> {
    if n < 6 || n % 2 == 1 {
        return Err(ExtensionError::Invalid(format!("needs n >= 6 even, got {n}")));
    }
    let classes = [
        ct(&[(1, 2), (n - 2, 1)]),
        ct(&[(1, n - 3), (3, 1)]),
        ct(&[(2, n / 2)]),
        ct(&[(1, 2), (2, (n - 2) / 2)]),
    ];
    rational_points(
        format!("S{n} with four rational branch points"),
        Group::Symmetric(n),
        classes.into_iter().map(|c| (ClassLabel::sn(c), true)).collect(),
    )
}

/// A_n (n >= 5 odd) with n - 1 branch points, all of type `[1^(n-3) 3^1]`.
pub fn an_three_cycle_data(n: u64) -> Result<ExtensionDescriptor, ExtensionError> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(ExtensionError::Invalid(format!("needs n >= 5 odd, got {n}")));
    }
    ExtensionDescriptor::new(
        format!("A{n} with {} three-cycle branch points", n - 1),
        Group::Alternating(n),
        FieldKind::RationalsQ,
        vec![BranchOrbit::new(
            Locus::Unspecified(n - 1),
            ClassLabel::an(ct(&[(1, n - 3), (3, 1)]), None),
            false,
        )],
        None,
    )
}

/// The A_n realization obtained from the S_n trinomial by the double group
/// trick: two conjugate points with the two halves of a split class and a
/// rational third point.
pub fn an_trinomial_data(n: u64, m: u64) -> Result<ExtensionDescriptor, ExtensionError> {
    if n < 5 || m == 0 || m >= n || m.gcd(&n) != 1 {
        return Err(ExtensionError::Invalid(format!(
            "needs n >= 5, 1 <= m < n and gcd(m, n) = 1; got n={n}, m={m}"
        )));
    }
    let (split, third) = if n.is_multiple_of(2) {
        (ct(&[(m, 1), (n - m, 1)]), ct(&[(n / 2, 2)]))
    } else if m % 2 == 1 {
        (ct(&[(n, 1)]), ct(&[(m, 1), ((n - m) / 2, 2)]))
    } else {
        (ct(&[(n, 1)]), ct(&[(m / 2, 2), (n - m, 1)]))
    };
    rational_points(
        format!("A{n} from the degree-{n} trinomial with m={m}"),
        Group::Alternating(n),
        vec![
            (ClassLabel::an(split.clone(), Some(1)), false),
            (ClassLabel::an(split, Some(2)), false),
            (ClassLabel::an(third, None), true),
        ],
    )
}

/// The A_n realization (n >= 6 even) induced by the four-point S_n one: five
/// branch points, the first rational when n >= 8.
pub fn an_five_point_data(n: u64) -> Result<ExtensionDescriptor, ExtensionError> {
    if n < 6 || n % 2 == 1 {
        return Err(ExtensionError::Invalid(format!("needs n >= 6 even, got {n}")));
    }
    let first = ct(&[(1, 2), ((n - 2) / 2, 2)]);
    let three = ct(&[(1, n - 3), (3, 1)]);
    let inv = if (n / 2).is_multiple_of(2) {
        ct(&[(2, n / 2)])
    } else {
        ct(&[(1, 2), (2, (n - 2) / 2)])
    };
    let an = |c: &CycleType| ClassLabel::an(c.clone(), None);
    rational_points(
        format!("A{n} with five branch points"),
        Group::Alternating(n),
        vec![
            (an(&first), n >= 8),
            (an(&three), false),
            (an(&three), false),
            (an(&inv), false),
            (an(&inv), false),
        ],
    )
}
