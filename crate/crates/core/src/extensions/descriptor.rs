//! Extension descriptors: a group, a base field, and the branch orbits with
//! their inertia classes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ExtensionError, FieldKind};
use crate::algebra::{BiPoly, RatPoly};
use crate::groups::{ClassLabel, Group};

/// Limits on what a descriptor read from the wire may contain.
pub const MAX_ORBITS: usize = 4096;
pub const MAX_ORBIT_DEGREE: u64 = 1 << 40;

/// Where a Galois orbit of branch points sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locus {
    /// Roots of a monic irreducible polynomial over Q (never `T` itself).
    Poly(RatPoly),
    Infinity,
    Zero,
    /// `degree` branch points whose position is not recorded.
    Unspecified(u64),
}

impl Locus {
    pub fn degree(&self) -> u64 {
        match self {
            Locus::Poly(p) => p.degree().unwrap_or(0) as u64,
            Locus::Infinity | Locus::Zero => 1,
            Locus::Unspecified(d) => *d,
        }
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Poly(p) => write!(f, "roots of {p}"),
            Locus::Infinity => write!(f, "infinity"),
            Locus::Zero => write!(f, "0"),
            Locus::Unspecified(1) => write!(f, "an unrecorded point"),
            Locus::Unspecified(d) => write!(f, "{d} unrecorded points"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LocusWire {
    Word(String),
    Coeffs(Vec<String>),
    Unspecified { unspecified: u64 },
}

impl Serialize for Locus {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Locus::Poly(p) => LocusWire::Coeffs(p.to_wire()),
            Locus::Infinity => LocusWire::Word("infinity".into()),
            Locus::Zero => LocusWire::Word("zero".into()),
            Locus::Unspecified(d) => LocusWire::Unspecified { unspecified: *d },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Locus {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match LocusWire::deserialize(d)? {
            LocusWire::Word(w) => match w.as_str() {
                "infinity" => Ok(Locus::Infinity),
                "zero" => Ok(Locus::Zero),
                _ => Err(D::Error::custom(format!("unknown locus {w:?}"))),
            },
            LocusWire::Coeffs(c) => RatPoly::from_wire(&c)
                .map(Locus::Poly)
                .map_err(D::Error::custom),
            LocusWire::Unspecified { unspecified } => Ok(Locus::Unspecified(unspecified)),
        }
    }
}

/// One Galois orbit of branch points. All points of the orbit are recorded
/// with the same class; for non-rational orbits the actual classes are
/// powers of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchOrbit {
    pub locus: Locus,
    pub class: ClassLabel,
    pub ramification_index: u64,
    /// The branch point is known to be Q-rational. For unrecorded loci of
    /// degree 1 `false` means "not known to be rational".
    pub rational: bool,
}

impl BranchOrbit {
    pub fn new(locus: Locus, class: ClassLabel, rational: bool) -> Self {
        BranchOrbit {
            ramification_index: class.element_order(),
            locus,
            class,
            rational,
        }
    }

    /// A recorded locus; rationality follows from its degree.
    pub fn at(locus: Locus, class: ClassLabel) -> Self {
        let rational = locus.degree() == 1;
        Self::new(locus, class, rational)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionDescriptor {
    label: String,
    group: Group,
    field: FieldKind,
    orbits: Vec<BranchOrbit>,
    defining_poly: Option<BiPoly>,
}

#[derive(Serialize, Deserialize)]
struct DescriptorWire {
    label: String,
    group: Group,
    #[serde(default)]
    field: FieldKind,
    orbits: Vec<BranchOrbit>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    defining_poly: Option<BiPoly>,
}

impl ExtensionDescriptor {
    /// Validates and normalizes: classes are put in canonical form for the
    /// group, ramification indices must equal element orders, and loci must
    /// be consistent (squarefree, pairwise coprime, at most one point at 0
    /// and one at infinity).
    pub fn new(
        label: impl Into<String>,
        group: Group,
        field: FieldKind,
        orbits: Vec<BranchOrbit>,
        defining_poly: Option<BiPoly>,
    ) -> Result<Self, ExtensionError> {
        if orbits.len() > MAX_ORBITS {
            return Err(ExtensionError::Invalid(format!(
                "{} orbits exceed the limit {MAX_ORBITS}",
                orbits.len()
            )));
        }
        let mut out = Vec::with_capacity(orbits.len());
        let (mut zero, mut infinity) = (0, 0);
        let mut polys: Vec<RatPoly> = Vec::new();
        for (i, o) in orbits.into_iter().enumerate() {
            let class = match group.normalize(&o.class) {
                Ok(c) => c,
                Err(e) => {
                    return Err(ExtensionError::Invalid(format!("orbit {i}: {e}")));
                }
            };
            if class.element_order() != o.ramification_index {
                return Err(ExtensionError::Invalid(format!(
                    "orbit {i}: class {class} has order {}, ramification index {} declared",
                    class.element_order(),
                    o.ramification_index
                )));
            }
            if class.element_order() == 1 {
                return Err(ExtensionError::Invalid(format!(
                    "orbit {i}: the trivial class is not an inertia class"
                )));
            }
            let locus = match o.locus {
                Locus::Poly(p) => {
                    let d = p.degree().unwrap_or(0);
                    if d == 0 {
                        return Err(ExtensionError::Invalid(format!("orbit {i}: constant locus")));
                    }
                    if !p.is_squarefree() {
                        return Err(ExtensionError::Invalid(format!(
                            "orbit {i}: locus {p} is not squarefree"
                        )));
                    }
                    let m = p.monic();
                    if m == RatPoly::t() {
                        Locus::Zero
                    } else {
                        if let Some(q) = polys.iter().find(|q| !q.gcd(&m).is_constant()) {
                            return Err(ExtensionError::Invalid(format!(
                                "orbit {i}: locus {m} meets {q}"
                            )));
                        }
                        polys.push(m.clone());
                        Locus::Poly(m)
                    }
                }
                Locus::Unspecified(d) if d == 0 || d > MAX_ORBIT_DEGREE => {
                    return Err(ExtensionError::Invalid(format!(
                        "orbit {i}: unrecorded degree {d} out of range"
                    )));
                }
                other => other,
            };
            match locus {
                Locus::Zero => zero += 1,
                Locus::Infinity => infinity += 1,
                _ => {}
            }
            let degree = locus.degree();
            let rational = match &locus {
                Locus::Unspecified(_) => o.rational,
                _ => degree == 1,
            };
            if o.rational && degree != 1 {
                return Err(ExtensionError::Invalid(format!(
                    "orbit {i}: a rational orbit has one point, not {degree}"
                )));
            }
            if o.rational != rational {
                return Err(ExtensionError::Invalid(format!(
                    "orbit {i}: rational flag {} contradicts {locus}",
                    o.rational
                )));
            }
            out.push(BranchOrbit {
                locus,
                class,
                ramification_index: o.ramification_index,
                rational,
            });
        }
        if zero > 1 || infinity > 1 {
            return Err(ExtensionError::Invalid(
                "more than one orbit at 0 or at infinity".into(),
            ));
        }
        if polys.iter().any(|p| p.eval(&num_traits::Zero::zero()) == num_traits::Zero::zero())
            && zero > 0
        {
            return Err(ExtensionError::Invalid("two orbits contain 0".into()));
        }
        if let Some(p) = &defining_poly {
            if p.degree_y().unwrap_or(0) < 1 {
                return Err(ExtensionError::Invalid(
                    "defining polynomial must involve Y".into(),
                ));
            }
        }
        Ok(ExtensionDescriptor {
            label: label.into(),
            group,
            field,
            orbits: out,
            defining_poly,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn orbits(&self) -> &[BranchOrbit] {
        &self.orbits
    }

    pub fn defining_poly(&self) -> Option<&BiPoly> {
        self.defining_poly.as_ref()
    }

    pub fn with_field(mut self, field: FieldKind) -> Self {
        self.field = field;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Number of branch points r.
    pub fn branch_point_count(&self) -> u64 {
        self.orbits.iter().map(|o| o.locus.degree()).sum()
    }

    /// Distinct inertia classes, in orbit order.
    pub fn classes(&self) -> Vec<ClassLabel> {
        let mut out: Vec<ClassLabel> = Vec::new();
        for o in &self.orbits {
            if !out.contains(&o.class) {
                out.push(o.class.clone());
            }
        }
        out
    }

    /// Multiplicity of each recorded class, counting every branch point.
    pub fn class_multiset(&self) -> BTreeMap<ClassLabel, u64> {
        let mut m = BTreeMap::new();
        for o in &self.orbits {
            *m.entry(o.class.clone()).or_insert(0) += o.locus.degree();
        }
        m
    }

    pub fn has_rational_branch_point(&self) -> bool {
        self.orbits.iter().any(|o| o.rational)
    }

    pub fn all_branch_points_rational(&self) -> bool {
        self.orbits.iter().all(|o| o.rational)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }

    pub fn parse_json(s: &str) -> Result<Self, ExtensionError> {
        serde_json::from_str(s).map_err(|e| ExtensionError::Parse(e.to_string()))
    }
}

impl Serialize for ExtensionDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DescriptorWire {
            label: self.label.clone(),
            group: self.group.clone(),
            field: self.field,
            orbits: self.orbits.clone(),
            defining_poly: self.defining_poly.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExtensionDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = DescriptorWire::deserialize(d)?;
        ExtensionDescriptor::new(w.label, w.group, w.field, w.orbits, w.defining_poly)
            .map_err(serde::de::Error::custom)
    }
}

/// `(m_E, m_E*)`: products of the orbit minimal polynomials and of their
/// reciprocals. A point at infinity contributes `T` to `m_E*` only, a point
/// at 0 contributes `T` to `m_E` only.
pub fn m_polys(e: &ExtensionDescriptor) -> Result<(RatPoly, RatPoly), ExtensionError> {
    let mut m = RatPoly::one();
    let mut m_star = RatPoly::one();
    for o in &e.orbits {
        match &o.locus {
            Locus::Poly(p) => {
                m = &m * p;
                m_star = &m_star * &p.reciprocal_minpoly()?;
            }
            Locus::Zero => m = &m * &RatPoly::t(),
            Locus::Infinity => m_star = &m_star * &RatPoly::t(),
            Locus::Unspecified(_) => {
                return Err(ExtensionError::Unsupported(format!(
                    "{}: branch points are not recorded",
                    e.label
                )))
            }
        }
    }
    Ok((m, m_star))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::PermGroup;

    fn z2() -> Group {
        Group::Perm(PermGroup::cyclic(2))
    }

    fn inv() -> ClassLabel {
        ClassLabel::explicit(PermGroup::cyclic(2).generators()[0].clone())
    }

    #[test]
    fn wire_round_trip() {
        let e = ExtensionDescriptor::new(
            "sqrt(T^2-2)",
            z2(),
            FieldKind::RationalsQ,
            vec![BranchOrbit::at(Locus::Poly(RatPoly::from_ints(&[-2, 0, 1])), inv())],
            None,
        )
        .unwrap();
        let back = ExtensionDescriptor::parse_json(&e.to_json()).unwrap();
        assert_eq!(back, e);
        assert_eq!(m_polys(&e).unwrap(), (RatPoly::from_ints(&[-2, 0, 1]), RatPoly::from_ints(&[-1, 0, 2])));
    }

    #[test]
    fn infinity_and_zero_conventions() {
        let e = ExtensionDescriptor::new(
            "inf",
            z2(),
            FieldKind::RationalsQ,
            vec![BranchOrbit::at(Locus::Infinity, inv())],
            None,
        )
        .unwrap();
        assert_eq!(m_polys(&e).unwrap(), (RatPoly::one(), RatPoly::t()));
        // a locus T is the point 0
        let e = ExtensionDescriptor::new(
            "zero",
            z2(),
            FieldKind::RationalsQ,
            vec![BranchOrbit::at(Locus::Poly(RatPoly::from_ints(&[0, 3])), inv())],
            None,
        )
        .unwrap();
        assert_eq!(e.orbits()[0].locus, Locus::Zero);
    }

    #[test]
    fn rejects_inconsistent_data() {
        let wrong_index = r#"{"label":"x","group":{"kind":"Sn","n":3},
            "orbits":[{"locus":"zero","class":{"kind":"sn","cycle_type":"3^1"},
            "ramification_index":2,"rational":true}]}"#;
        assert!(ExtensionDescriptor::parse_json(wrong_index).is_err());
        let two_inf = r#"{"label":"x","group":{"kind":"Sn","n":3},
            "orbits":[{"locus":"infinity","class":{"kind":"sn","cycle_type":"3^1"},"ramification_index":3,"rational":true},
                      {"locus":"infinity","class":{"kind":"sn","cycle_type":"1^1 2^1"},"ramification_index":2,"rational":true}]}"#;
        assert!(ExtensionDescriptor::parse_json(two_inf).is_err());
        let rational_quadratic = r#"{"label":"x","group":{"kind":"Sn","n":3},
            "orbits":[{"locus":["1","0","1"],"class":{"kind":"sn","cycle_type":"3^1"},"ramification_index":3,"rational":true}]}"#;
        assert!(ExtensionDescriptor::parse_json(rational_quadratic).is_err());
        let ok = r#"{"label":"x","group":{"kind":"Sn","n":3},
            "orbits":[{"locus":{"unspecified":4},"class":{"kind":"sn","cycle_type":"3^1"},"ramification_index":3,"rational":false}]}"#;
        let e = ExtensionDescriptor::parse_json(ok).unwrap();
        assert_eq!(e.branch_point_count(), 4);
        assert!(m_polys(&e).is_err());
        assert!(ExtensionDescriptor::parse_json("{").is_err());
    }
}
