//! The Branch Point Hypothesis, the Inertia Hypothesis and the
//! ramification-index variant of its part (b).

use std::collections::{BTreeMap, BTreeSet};

use super::{CriterionReport, Verdict};
use crate::algebra::RatPoly;
use crate::extensions::{m_polys, BranchOrbit, ExtensionDescriptor, FieldKind, Locus};
use crate::groups::{fuse, ClassLabel, GroupError};
use crate::numbertheory::prime_divisor_census;

/// Images in G of classes of H, for embeddings the descriptors do not
/// determine.
pub type FusionMap = BTreeMap<ClassLabel, ClassLabel>;

pub(crate) const GOOD_PRIME_NOTE: &str =
    "witness primes are not certified to be good primes for E1; finitely many of them may have to be discarded";

/// The classes of E2 and, when the group data allows it, their power closure.
pub(crate) struct Closure {
    classes: Vec<ClassLabel>,
    indices: Vec<u64>,
    exact: Result<BTreeSet<ClassLabel>, GroupError>,
}

impl Closure {
    pub(crate) fn of(e2: &ExtensionDescriptor) -> Self {
        let classes = e2.classes();
        let exact = e2.group().power_closure(&classes);
        Closure {
            indices: e2.orbits().iter().map(|o| o.ramification_index).collect(),
            classes,
            exact,
        }
    }
}

fn image_in_g(
    o: &BranchOrbit,
    e1: &ExtensionDescriptor,
    e2: &ExtensionDescriptor,
    fusion: Option<&FusionMap>,
) -> Result<Option<ClassLabel>, String> {
    if let Some(target) = fusion.and_then(|f| f.get(&o.class)) {
        return e2
            .group()
            .normalize(target)
            .map(Some)
            .map_err(|e| format!("fusion map sends {} to {target}, which is not a class of {}: {e}", o.class, e2.group().name()));
    }
    Ok(fuse(&o.class, e1.group(), e2.group()))
}

/// Whether `C_{i,1}^G` stays outside `{C_{j,2}^a}`: Established when it does,
/// Refuted when it is such a power. Falls back to ramification indices when
/// the class of G is not known.
pub(crate) fn avoids_closure(
    o: &BranchOrbit,
    e1: &ExtensionDescriptor,
    e2: &ExtensionDescriptor,
    closure: &Closure,
    fusion: Option<&FusionMap>,
    trace: &mut Vec<String>,
) -> Verdict {
    let image = match image_in_g(o, e1, e2, fusion) {
        Ok(img) => img,
        Err(msg) => return Verdict::inconclusive(msg),
    };
    if let Some(img) = &image {
        match &closure.exact {
            Ok(set) => {
                if !set.contains(img) {
                    return Verdict::established(format!(
                        "{img} is a power of no inertia class of {}",
                        e2.label()
                    ));
                }
                let source = closure
                    .classes
                    .iter()
                    .find(|c| e2.group().powers(c).is_ok_and(|p| p.contains(img)))
                    .map(|c| c.to_string())
                    .unwrap_or_default();
                return Verdict::refuted(format!("{img} is a power of {source}"));
            }
            Err(_) if closure.classes.contains(img) => {
                return Verdict::refuted(format!("{img} is itself an inertia class of {}", e2.label()));
            }
            Err(_) => {}
        }
    }
    // ramification-index variant
    let e = o.ramification_index;
    let multiples: Vec<u64> = closure.indices.iter().copied().filter(|ej| ej % e == 0).collect();
    if multiples.is_empty() {
        trace.push(format!(
            "{}: only element orders are comparable, used the ramification-index variant",
            o.class
        ));
        return Verdict::established(format!(
            "{} has order {e}, which divides no ramification index of {} {:?}",
            o.class,
            e2.label(),
            closure.indices
        ));
    }
    let what = if image.is_none() { "fusion unknown" } else { "class data insufficient" };
    Verdict::inconclusive(format!(
        "{what}: order {e} of {} divides the ramification index {} of {}",
        o.class, multiples[0], e2.label()
    ))
}

/// Part (a) of the Inertia Hypothesis for one orbit.
pub(crate) fn infinite_prime_divisors(field: FieldKind, o: &BranchOrbit) -> Verdict {
    if field.infinite_prime_divisors() {
        Verdict::established(format!(
            "over {} the nonconstant polynomial m·m* of {} has infinitely many prime divisors",
            field.name(),
            o.locus
        ))
    } else {
        Verdict::inconclusive(format!(
            "the field flags of {} do not guarantee infinitely many prime divisors",
            field.name()
        ))
    }
}

fn orbit_name(i: usize, o: &BranchOrbit) -> String {
    format!("orbit {} {}", i + 1, o.class)
}

pub fn eval_inertia_hypothesis(
    e1: &ExtensionDescriptor,
    e2: &ExtensionDescriptor,
    fusion: Option<&FusionMap>,
) -> CriterionReport {
    let mut rep = CriterionReport::new("inertia_hypothesis");
    let closure = Closure::of(e2);
    if let Err(e) = &closure.exact {
        rep.note(format!("power closure of {} unavailable: {e}", e2.label()));
    }
    let mut per_orbit = Vec::new();
    for (i, o) in e1.orbits().iter().enumerate() {
        let a = infinite_prime_divisors(e1.field(), o);
        let b = avoids_closure(o, e1, e2, &closure, fusion, &mut rep.trace);
        per_orbit.push(Verdict::all([&a, &b]));
        rep.push(format!("{} (a)", orbit_name(i, o)), a);
        rep.push(format!("{} (b)", orbit_name(i, o)), b);
    }
    rep.note(GOOD_PRIME_NOTE);
    let v = Verdict::any(&per_orbit);
    rep.with_verdict(v)
}

/// The loci product `m·m*`, or why it is unavailable.
pub(crate) fn m_product(e: &ExtensionDescriptor) -> Result<RatPoly, String> {
    let (m, ms) = m_polys(e).map_err(|err| err.to_string())?;
    Ok(&m * &ms)
}

/// Primes `p <= bound`, excluded for neither polynomial, dividing `divides`
/// (if given) and not dividing `avoids`.
pub(crate) fn census_witnesses(
    divides: Option<&RatPoly>,
    avoids: &RatPoly,
    bound: u64,
) -> Result<Vec<u64>, String> {
    let c2 = prime_divisor_census(avoids, bound).map_err(|e| e.to_string())?;
    let mut out: BTreeSet<u64> = c2.non_divisors.into_iter().collect();
    if let Some(d) = divides {
        let c1 = prime_divisor_census(d, bound).map_err(|e| e.to_string())?;
        let div: BTreeSet<u64> = c1.divisors.into_iter().collect();
        out.retain(|p| div.contains(p));
    }
    Ok(out.into_iter().collect())
}

pub(crate) fn rational_point_note(e: &ExtensionDescriptor) -> Option<String> {
    e.orbits().iter().find(|o| o.rational).map(|o| {
        format!(
            "{} has the k-rational branch point {} ({}), so all but finitely many primes divide its m·m*",
            e.label(),
            o.locus,
            o.class
        )
    })
}

pub fn eval_branch_point_hypothesis(
    e1: &ExtensionDescriptor,
    e2: &ExtensionDescriptor,
    prime_bound: u64,
    min_witnesses: usize,
) -> CriterionReport {
    let mut rep = CriterionReport::new("branch_point_hypothesis");
    let v = bph_verdict(e1, e2, prime_bound, min_witnesses, &mut rep);
    rep.push("BPH", v.clone());
    rep.note(GOOD_PRIME_NOTE);
    rep.with_verdict(v)
}

fn bph_verdict(
    e1: &ExtensionDescriptor,
    e2: &ExtensionDescriptor,
    prime_bound: u64,
    min_witnesses: usize,
    rep: &mut CriterionReport,
) -> Verdict {
    if !e1.field().is_number_field() || !e2.field().is_number_field() {
        return Verdict::inconclusive("arithmetic only over Q");
    }
    if let Some(note) = rational_point_note(e2) {
        rep.note(note);
        return Verdict::inconclusive(format!(
            "{} has a k-rational branch point; the hypothesis cannot hold",
            e2.label()
        ));
    }
    let (p1, p2) = match (m_product(e1), m_product(e2)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Verdict::inconclusive(e),
    };
    rep.note(format!("m·m* for {}: {p1}", e1.label()));
    rep.note(format!("m·m* for {}: {p2}", e2.label()));
    match census_witnesses(Some(&p1), &p2, prime_bound) {
        Ok(w) if w.len() >= min_witnesses => Verdict::empirical(prime_bound, w),
        Ok(w) => Verdict::inconclusive(format!(
            "only {} witness primes up to {prime_bound} (need {min_witnesses})",
            w.len()
        )),
        Err(e) => Verdict::inconclusive(e),
    }
}

/// Established iff some orbit of E1 has a ramification index with no
/// multiple among the indices of E2.
pub fn eval_ramification_variant(e1: &ExtensionDescriptor, e2: &ExtensionDescriptor) -> Verdict {
    let idx2: Vec<u64> = e2.orbits().iter().map(|o| o.ramification_index).collect();
    for o in e1.orbits() {
        let e = o.ramification_index;
        if idx2.iter().all(|ej| ej % e != 0) {
            return Verdict::established(format!(
                "{} has index {e}; no index of {} in {idx2:?} is a multiple",
                o.class,
                e2.label()
            ));
        }
    }
    Verdict::refuted(format!(
        "every index of {} divides some index of {} {idx2:?}",
        e1.label(),
        e2.label()
    ))
}

/// Descriptor orbits whose locus is recorded but not rational.
pub(crate) fn known_irrational(o: &BranchOrbit) -> bool {
    !o.rational && !matches!(o.locus, Locus::Unspecified(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::builders::{class_data, cyclotomic_realization, morse_data, sqrt, trinomial_for};
    use crate::groups::Group;

    fn abstract_group(name: &str, classes: &[(&str, u64)]) -> Group {
        Group::Abstract {
            name: name.into(),
            class_orders: classes.iter().map(|(n, o)| (n.to_string(), *o)).collect(),
        }
    }

    fn rigid(label: &str, group: &str, classes: &[(&str, u64, bool)]) -> ExtensionDescriptor {
        let g = abstract_group(group, &classes.iter().map(|(n, o, _)| (*n, *o)).collect::<Vec<_>>());
        class_data(
            label,
            g,
            classes.iter().map(|(n, o, r)| (ClassLabel::named(n, *o), *r)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn cyclotomic_against_small_indices() {
        let e1 = cyclotomic_realization(5).unwrap();
        let e2 = rigid("E2", "G", &[("2A", 2, true), ("3A", 3, true), ("6A", 6, true)]);
        let r = eval_inertia_hypothesis(&e1, &e2, None);
        assert!(r.verdict.is_established(), "{}", r.to_text());
        assert!(eval_ramification_variant(&e1, &e2).is_established());
    }

    #[test]
    fn self_comparison_is_refuted() {
        for e in [
            cyclotomic_realization(7).unwrap(),
            trinomial_for(5, 2).unwrap(),
            morse_data(6).unwrap(),
            rigid("Th", "Th", &[("2A", 2, true), ("3A", 3, true), ("19A", 19, true)]),
        ] {
            assert!(eval_inertia_hypothesis(&e, &e, None).verdict.is_refuted());
            assert!(eval_ramification_variant(&e, &e).is_refuted());
        }
    }

    #[test]
    fn trinomial_against_morse() {
        // [2 3] is no power of [5] or [1^3 2]
        let e1 = trinomial_for(5, 2).unwrap();
        let e2 = morse_data(5).unwrap();
        let r = eval_inertia_hypothesis(&e1, &e2, None);
        assert!(r.verdict.is_established());
        assert!(r.condition("orbit 3 [1^3 2^1] (b)").unwrap().is_refuted());
        // in the other direction every Morse class is a power of a trinomial class
        assert!(eval_inertia_hypothesis(&e2, &e1, None).verdict.is_refuted());
    }

    #[test]
    fn unknown_fusion() {
        let e1 = rigid("J2", "J2", &[("5A", 5, false), ("5B", 5, false), ("7A", 7, true)]);
        let e2 = morse_data(604_807).unwrap(); // 7 | n
        let r = eval_inertia_hypothesis(&e1, &e2, None);
        // the 5-classes avoid by orders, the 7-class does not decide
        assert!(r.verdict.is_established());
        let seven = r.condition("orbit 3 7A (b)").unwrap();
        assert!(matches!(seven, Verdict::Inconclusive { reason } if reason.contains("fusion unknown")));
        let e2 = morse_data(604_800).unwrap(); // 5 | n and 7 | n
        assert!(eval_inertia_hypothesis(&e1, &e2, None).verdict.is_inconclusive());
    }

    #[test]
    fn fusion_map_is_used() {
        let e1 = rigid("H", "H", &[("3A", 3, true)]);
        let e2 = trinomial_for(5, 2).unwrap();
        assert!(eval_inertia_hypothesis(&e1, &e2, None).verdict.is_inconclusive());
        let mut f = FusionMap::new();
        f.insert(ClassLabel::named("3A", 3), ClassLabel::sn_str("1^2 3^1").unwrap());
        // [1^2 3] = [2 3]^2
        assert!(eval_inertia_hypothesis(&e1, &e2, Some(&f)).verdict.is_refuted());
        let e2 = morse_data(5).unwrap();
        assert!(eval_inertia_hypothesis(&e1, &e2, Some(&f)).verdict.is_established());
    }

    #[test]
    fn bph_examples() {
        let t = sqrt(&RatPoly::t()).unwrap();
        let phi5 = sqrt(&crate::algebra::cyclotomic(5)).unwrap();
        let r = eval_branch_point_hypothesis(&t, &phi5, 500, 20);
        match &r.verdict {
            Verdict::EmpiricallySupported { witnesses, .. } => {
                assert!(witnesses.len() >= 20);
                assert!(witnesses.iter().all(|p| p % 5 != 1 && *p != 5));
            }
            v => panic!("{v}"),
        }
        assert!(eval_branch_point_hypothesis(&phi5, &phi5, 500, 1).verdict.is_inconclusive());
        assert!(eval_branch_point_hypothesis(&phi5, &t, 500, 1).verdict.is_inconclusive());
    }
}
