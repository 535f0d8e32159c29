//! Conjugacy-class labels and their arithmetic inside a given group.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::alternating::{power_tag, split_class_is_real_rational};
use super::{an_representative, split_tag, CycleType, GroupError, Partitions, Perm, PermGroup};
use crate::algebra::factor_u64;

/// Above this degree the full class list of S_n or A_n is not produced.
const MAX_CLASS_LIST_DEGREE: u64 = 40;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassLabel {
    /// An S_n class, determined by its cycle type.
    Sn { cycle_type: CycleType },
    /// An A_n class; `tag` is 1 or 2 for split types and absent otherwise.
    An {
        cycle_type: CycleType,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tag: Option<u8>,
    },
    /// Atlas-style name carrying only the element order.
    Abstract { name: String, order: u64 },
    /// The class of a concrete permutation in a permutation group.
    Explicit { perm: Perm },
}

impl ClassLabel {
    pub fn sn(ct: CycleType) -> Self {
        ClassLabel::Sn { cycle_type: ct }
    }

    pub fn an(ct: CycleType, tag: Option<u8>) -> Self {
        ClassLabel::An { cycle_type: ct, tag }
    }

    pub fn named(name: &str, order: u64) -> Self {
        ClassLabel::Abstract {
            name: name.to_string(),
            order,
        }
    }

    pub fn explicit(perm: Perm) -> Self {
        ClassLabel::Explicit { perm }
    }

    /// Shorthand for S_n labels: `ClassLabel::sn_str("1^3 2^1")`.
    pub fn sn_str(s: &str) -> Result<Self, GroupError> {
        Ok(Self::sn(s.parse()?))
    }

    pub fn element_order(&self) -> u64 {
        match self {
            ClassLabel::Sn { cycle_type } | ClassLabel::An { cycle_type, .. } => {
                cycle_type.element_order()
            }
            ClassLabel::Abstract { order, .. } => *order,
            ClassLabel::Explicit { perm } => perm.order(),
        }
    }

    pub fn cycle_type(&self) -> Option<CycleType> {
        match self {
            ClassLabel::Sn { cycle_type } | ClassLabel::An { cycle_type, .. } => {
                Some(cycle_type.clone())
            }
            ClassLabel::Explicit { perm } => Some(perm.cycle_type()),
            ClassLabel::Abstract { .. } => None,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Sn { cycle_type } => write!(f, "[{cycle_type}]"),
            ClassLabel::An { cycle_type, tag: Some(t) } => write!(f, "[{cycle_type}]_{t}"),
            ClassLabel::An { cycle_type, tag: None } => write!(f, "[{cycle_type}]"),
            ClassLabel::Abstract { name, .. } => write!(f, "{name}"),
            ClassLabel::Explicit { perm } => write!(f, "class of {perm}"),
        }
    }
}

/// A group reference, as carried by extension descriptors.
#[derive(Clone, Debug, PartialEq)]
pub enum Group {
    Symmetric(u64),
    Alternating(u64),
    Perm(PermGroup),
    /// Known only through class names and element orders.
    Abstract {
        name: String,
        class_orders: BTreeMap<String, u64>,
    },
    Psl2 { p: u64, group: PermGroup },
}

fn divisors(e: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, k) in factor_u64(e) {
        let base = ds.clone();
        let mut pk = 1u64;
        for _ in 0..k {
            pk *= p;
            ds.extend(base.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

impl Group {
    pub fn name(&self) -> String {
        match self {
            Group::Symmetric(n) => format!("S{n}"),
            Group::Alternating(n) => format!("A{n}"),
            Group::Perm(g) => format!("permutation group of degree {} and order {}", g.degree(), g.order()),
            Group::Abstract { name, .. } => name.clone(),
            Group::Psl2 { p, .. } => format!("PSL2({p})"),
        }
    }

    /// Group order, when known and small enough for u128.
    pub fn order(&self) -> Option<u128> {
        let fact = |n: u64| (2..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
        match self {
            Group::Symmetric(n) => fact(*n),
            Group::Alternating(n) => fact(*n).map(|f| if *n >= 2 { f / 2 } else { f }),
            Group::Perm(g) | Group::Psl2 { group: g, .. } => Some(g.order()),
            Group::Abstract { .. } => None,
        }
    }

    /// The group as an explicit permutation group.
    pub fn perm_group(&self) -> Result<Cow<'_, PermGroup>, GroupError> {
        let too_big = |n: u64| {
            if n as usize > super::MAX_PERM_DEGREE {
                Err(GroupError::TooLarge(format!("degree {n} is not materialized")))
            } else {
                Ok(())
            }
        };
        match self {
            Group::Symmetric(n) => {
                too_big(*n)?;
                Ok(Cow::Owned(PermGroup::symmetric(*n as usize)))
            }
            Group::Alternating(n) => {
                too_big(*n)?;
                Ok(Cow::Owned(PermGroup::alternating(*n as usize)))
            }
            Group::Perm(g) | Group::Psl2 { group: g, .. } => Ok(Cow::Borrowed(g)),
            Group::Abstract { name, .. } => Err(GroupError::OrderOnly(format!(
                "{name} has no permutation representation"
            ))),
        }
    }

    fn degree_check(&self, n: u64, ct: &CycleType) -> Result<(), GroupError> {
        if ct.degree() != n {
            return Err(GroupError::Invalid(format!(
                "cycle type [{ct}] has degree {}, group has degree {n}",
                ct.degree()
            )));
        }
        Ok(())
    }

    /// Canonical form of a label in this group; rejects labels that do not
    /// name a class of it.
    pub fn normalize(&self, label: &ClassLabel) -> Result<ClassLabel, GroupError> {
        match (self, label) {
            (Group::Symmetric(n), ClassLabel::Sn { cycle_type: ct })
            | (Group::Symmetric(n), ClassLabel::An { cycle_type: ct, .. }) => {
                self.degree_check(*n, ct)?;
                Ok(ClassLabel::sn(ct.clone()))
            }
            (Group::Symmetric(n), ClassLabel::Explicit { perm }) => {
                self.degree_check(*n, &perm.cycle_type())?;
                Ok(ClassLabel::sn(perm.cycle_type()))
            }
            (Group::Alternating(n), ClassLabel::Sn { cycle_type: ct }) => {
                self.degree_check(*n, ct)?;
                if ct.an_class_splits()? {
                    return Err(GroupError::Invalid(format!(
                        "[{ct}] splits in A{n}; give a tag"
                    )));
                }
                Ok(ClassLabel::an(ct.clone(), None))
            }
            (Group::Alternating(n), ClassLabel::An { cycle_type: ct, tag }) => {
                self.degree_check(*n, ct)?;
                match (ct.an_class_splits()?, tag) {
                    (true, Some(1 | 2)) | (false, None) => Ok(label.clone()),
                    (true, Some(t)) => Err(GroupError::Invalid(format!("bad split tag {t}"))),
                    (true, None) => Err(GroupError::Invalid(format!(
                        "[{ct}] splits in A{n}; give a tag"
                    ))),
                    (false, Some(_)) => Err(GroupError::Invalid(format!(
                        "[{ct}] does not split in A{n}; no tag allowed"
                    ))),
                }
            }
            (Group::Alternating(n), ClassLabel::Explicit { perm }) => {
                self.degree_check(*n, &perm.cycle_type())?;
                Ok(ClassLabel::an(perm.cycle_type(), split_tag(perm)?))
            }
            (Group::Perm(g) | Group::Psl2 { group: g, .. }, ClassLabel::Explicit { perm }) => {
                if !g.contains(perm) {
                    return Err(GroupError::Invalid(format!("{perm} is not in the group")));
                }
                let idx = g.class_index(perm)?;
                Ok(ClassLabel::explicit(
                    g.conjugacy_classes()?[idx].representative.clone(),
                ))
            }
            (Group::Abstract { class_orders, name: gname }, ClassLabel::Abstract { name, order }) => {
                match class_orders.get(name) {
                    Some(o) if o == order => Ok(label.clone()),
                    Some(o) => Err(GroupError::Invalid(format!(
                        "class {name} of {gname} has order {o}, not {order}"
                    ))),
                    None => Err(GroupError::Invalid(format!("{gname} has no class {name}"))),
                }
            }
            (Group::Abstract { .. }, _) => Err(GroupError::Invalid(format!(
                "{} only accepts named classes",
                self.name()
            ))),
            (_, ClassLabel::Abstract { name, .. }) => Err(GroupError::OrderOnly(format!(
                "named class {name} has no representative in {}",
                self.name()
            ))),
            (_, _) => Err(GroupError::Invalid(format!(
                "label {label} does not fit {}",
                self.name()
            ))),
        }
    }

    pub fn identity_class(&self) -> Result<ClassLabel, GroupError> {
        match self {
            Group::Symmetric(n) => Ok(ClassLabel::sn(CycleType::identity(*n))),
            Group::Alternating(n) => Ok(ClassLabel::an(CycleType::identity(*n), None)),
            Group::Perm(g) | Group::Psl2 { group: g, .. } => Ok(ClassLabel::explicit(g.identity())),
            Group::Abstract { name, .. } => Err(GroupError::OrderOnly(format!(
                "{name} has no identity label"
            ))),
        }
    }

    /// The class `C^a`.
    pub fn class_power(&self, label: &ClassLabel, a: u64) -> Result<ClassLabel, GroupError> {
        if a == 0 {
            return Err(GroupError::Invalid("exponent must be positive".into()));
        }
        match self.normalize(label)? {
            ClassLabel::Sn { cycle_type } => Ok(ClassLabel::sn(cycle_type.power(a))),
            ClassLabel::An { cycle_type, tag } => {
                let pct = cycle_type.power(a);
                let ptag = match tag {
                    Some(t) if a.gcd(&cycle_type.element_order()) == 1 => {
                        Some(power_tag(&cycle_type, t, a))
                    }
                    _ => None,
                };
                Ok(ClassLabel::an(pct, ptag))
            }
            ClassLabel::Explicit { perm } => {
                self.normalize(&ClassLabel::explicit(perm.pow(a as i64)))
            }
            ClassLabel::Abstract { name, order } => {
                if a % order == 1 % order {
                    Ok(label.clone())
                } else {
                    Err(GroupError::OrderOnly(format!(
                        "power {a} of {name} is unknown without class data"
                    )))
                }
            }
        }
    }

    /// `{C^a : a >= 1}`.
    pub fn powers(&self, label: &ClassLabel) -> Result<BTreeSet<ClassLabel>, GroupError> {
        let c = self.normalize(label)?;
        let e = c.element_order();
        let mut out = BTreeSet::new();
        match &c {
            // the type of g^a depends only on gcd(a, e)
            ClassLabel::Sn { .. } => {
                for d in divisors(e) {
                    out.insert(self.class_power(&c, d)?);
                }
            }
            ClassLabel::An { cycle_type, tag } => {
                for d in divisors(e) {
                    out.insert(self.class_power(&c, d)?);
                }
                if let Some(t) = tag {
                    if !split_class_is_real_rational(cycle_type) {
                        out.insert(ClassLabel::an(cycle_type.clone(), Some(3 - t)));
                    }
                }
            }
            ClassLabel::Explicit { .. } => {
                for a in 1..=e {
                    out.insert(self.class_power(&c, a)?);
                }
            }
            ClassLabel::Abstract { name, .. } => {
                return Err(GroupError::OrderOnly(format!(
                    "powers of {name} are unknown without class data"
                )))
            }
        }
        Ok(out)
    }

    /// `{C_i^a : i, a >= 1}`.
    pub fn power_closure(&self, labels: &[ClassLabel]) -> Result<BTreeSet<ClassLabel>, GroupError> {
        let mut out = BTreeSet::new();
        for c in labels {
            out.extend(self.powers(c)?);
        }
        Ok(out)
    }

    /// All classes, for groups where the list is reasonable to produce.
    pub fn all_classes(&self) -> Result<Vec<ClassLabel>, GroupError> {
        match self {
            Group::Symmetric(n) | Group::Alternating(n) if *n > MAX_CLASS_LIST_DEGREE => {
                Err(GroupError::TooLarge(format!(
                    "class list of degree {n} groups is not produced"
                )))
            }
            _ => {
                let mut out = Vec::new();
                self.for_each_class(|c| {
                    out.push(c);
                    false
                })?;
                Ok(out)
            }
        }
    }

    /// Visits classes in a fixed order until `f` returns true.
    fn for_each_class(&self, mut f: impl FnMut(ClassLabel) -> bool) -> Result<(), GroupError> {
        match self {
            Group::Symmetric(n) => {
                for ct in Partitions::new(*n) {
                    if f(ClassLabel::sn(ct)) {
                        break;
                    }
                }
            }
            Group::Alternating(n) => {
                for ct in Partitions::new(*n).filter(CycleType::is_even) {
                    if ct.an_class_splits()? {
                        if f(ClassLabel::an(ct.clone(), Some(1))) || f(ClassLabel::an(ct, Some(2))) {
                            break;
                        }
                    } else if f(ClassLabel::an(ct, None)) {
                        break;
                    }
                }
            }
            Group::Perm(g) | Group::Psl2 { group: g, .. } => {
                for c in g.conjugacy_classes()? {
                    if f(ClassLabel::explicit(c.representative.clone())) {
                        break;
                    }
                }
            }
            Group::Abstract { name, .. } => {
                return Err(GroupError::OrderOnly(format!(
                    "the class list of {name} is unknown"
                )))
            }
        }
        Ok(())
    }

    /// A class of the group outside `set`, if any. Enumerates lazily, so this
    /// works for S_n and A_n of any degree when `set` is small.
    pub fn class_outside(&self, set: &BTreeSet<ClassLabel>) -> Result<Option<ClassLabel>, GroupError> {
        let mut found = None;
        self.for_each_class(|c| {
            if set.contains(&c) {
                false
            } else {
                found = Some(c);
                true
            }
        })?;
        Ok(found)
    }

    /// Index of the class of `label` in `perm_group()`'s class list.
    pub fn class_index(&self, g: &PermGroup, label: &ClassLabel) -> Result<usize, GroupError> {
        let rep = match self.normalize(label)? {
            ClassLabel::Sn { cycle_type } => cycle_type.canonical_representative()?,
            ClassLabel::An { cycle_type, tag } => an_representative(&cycle_type, tag)?,
            ClassLabel::Explicit { perm } => perm,
            ClassLabel::Abstract { name, .. } => {
                return Err(GroupError::OrderOnly(format!("{name} has no representative")))
            }
        };
        g.class_index(&rep)
    }
}

/// Image of a class of `from` in `to` when `from` sits inside `to` in a way
/// the data determines (same group, A_n in S_n, permutation subgroups).
/// `None` means only element orders can be compared.
pub fn fuse(label: &ClassLabel, from: &Group, to: &Group) -> Option<ClassLabel> {
    if from == to {
        return to.normalize(label).ok();
    }
    match (from, to) {
        (Group::Alternating(n), Group::Symmetric(m)) if n == m => to.normalize(label).ok(),
        (Group::Perm(h) | Group::Psl2 { group: h, .. }, _) => {
            from.normalize(label).ok()?;
            match to {
                Group::Symmetric(m) if *m as usize == h.degree() => to.normalize(label).ok(),
                Group::Alternating(m) if *m as usize == h.degree() => to.normalize(label).ok(),
                Group::Perm(g) | Group::Psl2 { group: g, .. }
                    if g.degree() == h.degree() && h.generators().iter().all(|x| g.contains(x)) =>
                {
                    to.normalize(label).ok()
                }
                _ => None,
            }
        }
        _ => None,
    }
}
