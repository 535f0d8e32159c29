//! Group-theoretic conditions: (H2) with Fried's conditions, and the
//! branch-orbit conditions for extensions over a number field.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::{CriterionReport, Verdict};
use crate::algebra::{cyclotomic_index, factor_bigint, RatPoly};
use crate::extensions::{ExtensionDescriptor, Locus};
use crate::groups::{an_representative, is_rational_class_set, ClassLabel, Group, GroupError, Perm, PermGroup};
use crate::numbertheory::squarefree_kernel_rational;

/// Whether the normal closure of `reps` is all of `g`.
fn normal_closure_is_everything(g: &PermGroup, reps: &[Perm]) -> Result<bool, GroupError> {
    let mut gens: Vec<Perm> = reps.iter().filter(|r| !r.is_identity()).cloned().collect();
    let mut n = PermGroup::new(g.degree(), gens.clone())?;
    let mut i = 0;
    while i < gens.len() {
        for s in g.generators() {
            let c = gens[i].conjugate_by(s);
            if !n.contains(&c) {
                gens.push(c);
                n = PermGroup::new(g.degree(), gens.clone())?;
            }
        }
        i += 1;
    }
    Ok(n.order() == g.order())
}

fn representative(group: &Group, pg: &PermGroup, c: &ClassLabel) -> Result<Perm, GroupError> {
    match group.normalize(c)? {
        ClassLabel::Sn { cycle_type } => cycle_type.canonical_representative(),
        ClassLabel::An { cycle_type, tag } => an_representative(&cycle_type, tag),
        ClassLabel::Explicit { perm } => Ok(perm),
        other => {
            let idx = group.class_index(pg, &other)?;
            Ok(pg.conjugacy_classes()?[idx].representative.clone())
        }
    }
}

fn generation(group: &Group, classes: &[ClassLabel]) -> Verdict {
    let pg = match group.perm_group() {
        Ok(pg) => pg,
        Err(e) => return Verdict::inconclusive(format!("generation not decided: {e}")),
    };
    let reps: Result<Vec<Perm>, GroupError> = classes.iter().map(|c| representative(group, &pg, c)).collect();
    match reps.and_then(|r| normal_closure_is_everything(&pg, &r)) {
        Ok(true) => Verdict::established(format!("the classes generate {}", group.name())),
        Ok(false) => Verdict::refuted(format!("the classes generate a proper normal subgroup of {}", group.name())),
        Err(e) => Verdict::inconclusive(format!("generation not decided: {e}")),
    }
}

fn rationality(group: &Group, classes: &[ClassLabel]) -> Verdict {
    match group {
        Group::Symmetric(_) => Verdict::established("every class of S_n is rational"),
        Group::Alternating(_) => {
            let set: Result<BTreeSet<ClassLabel>, GroupError> =
                classes.iter().map(|c| group.normalize(c)).collect();
            let set = match set {
                Ok(s) => s,
                Err(e) => return Verdict::inconclusive(e.to_string()),
            };
            for c in &set {
                let same_type: Vec<ClassLabel> = match group.powers(c) {
                    Ok(p) => p.into_iter().filter(|x| x.cycle_type() == c.cycle_type()).collect(),
                    Err(e) => return Verdict::inconclusive(e.to_string()),
                };
                if let Some(missing) = same_type.iter().find(|x| !set.contains(x)) {
                    return Verdict::refuted(format!("{missing} is a power of {c} coprime to its order but is missing"));
                }
            }
            Verdict::established("closed under powers prime to the order")
        }
        Group::Perm(pg) | Group::Psl2 { group: pg, .. } => {
            let idx: Result<Vec<usize>, GroupError> = classes.iter().map(|c| group.class_index(pg, c)).collect();
            match idx.and_then(|i| is_rational_class_set(pg, &i)) {
                Ok(true) => Verdict::established("closed under powers prime to the exponent"),
                Ok(false) => Verdict::refuted("some power prime to the exponent leaves the set"),
                Err(e) => Verdict::inconclusive(e.to_string()),
            }
        }
        Group::Abstract { name, .. } => Verdict::inconclusive(format!("power maps of {name} are unknown")),
    }
}

/// (H2) and the three conditions of Fried's corollary for the class list
/// `classes` of `group`.
pub fn eval_h2_and_fried(group: &Group, classes: &[ClassLabel]) -> CriterionReport {
    let mut rep = CriterionReport::new("h2_fried");
    let h2 = match group.power_closure(classes) {
        Ok(closure) => {
            rep.note(format!(
                "power closure: {}",
                closure.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
            ));
            match group.class_outside(&closure) {
                Ok(Some(c)) => Verdict::established(format!("{c} is a power of no listed class")),
                Ok(None) => Verdict::refuted("the powers of the listed classes give the set of all conjugacy classes"),
                Err(e) => Verdict::inconclusive(e.to_string()),
            }
        }
        Err(e) => Verdict::inconclusive(format!("power closure unavailable: {e}")),
    };
    rep.push("(1) the classes generate G", generation(group, classes));
    rep.push("(2) rational set", rationality(group, classes));
    rep.push("(3) (H2)", h2);
    rep.note("Fried's conditions give non-parametricity only conditionally on the conjecture they come from");
    rep.conclude_all()
}

/// Squarefree kernel of a quadratic's discriminant, as a set of -1 and primes.
fn quadratic_kernel(p: &RatPoly) -> Option<BTreeSet<BigInt>> {
    let c = p.coeffs();
    let disc = &c[1] * &c[1] - crate::algebra::int(4) * &c[0] * &c[2];
    let k = squarefree_kernel_rational(&disc).ok()?;
    let v = k.value();
    let mut set: BTreeSet<BigInt> = if v.abs() == BigInt::from(1) {
        BTreeSet::new()
    } else {
        factor_bigint(v).into_iter().map(|(q, _)| q).collect()
    };
    if v.is_negative() {
        set.insert(BigInt::from(-1));
    }
    Some(set)
}

/// Rank over F_2 of kernel vectors given as sets of basis elements.
fn f2_rank(vectors: Vec<BTreeSet<BigInt>>) -> usize {
    let mut basis: BTreeMap<BigInt, BTreeSet<BigInt>> = BTreeMap::new();
    for mut v in vectors {
        while let Some(top) = v.iter().next_back().cloned() {
            match basis.get(&top) {
                Some(b) => v = v.symmetric_difference(b).cloned().collect(),
                None => {
                    basis.insert(top, v);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn linear_disjointness(polys: &[RatPoly]) -> Verdict {
    if polys.len() <= 1 {
        return Verdict::established("a single orbit field is trivially disjoint from the rest");
    }
    if polys.iter().all(|p| p.degree() == Some(2)) {
        let kernels: Option<Vec<BTreeSet<BigInt>>> = polys.iter().map(quadratic_kernel).collect();
        let Some(kernels) = kernels else {
            return Verdict::inconclusive("discriminant kernel unavailable");
        };
        let rank = f2_rank(kernels);
        return Verdict::from_bool(
            rank == polys.len(),
            "the quadratic fields have multiplicatively independent discriminant kernels",
            format!(
                "the discriminant kernels span only {rank} dimensions for {} quadratic fields",
                polys.len()
            ),
        );
    }
    let idx: Option<Vec<u64>> = polys.iter().map(cyclotomic_index).collect();
    if let Some(ns) = idx {
        for (i, &n) in ns.iter().enumerate() {
            let rest = ns
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(1u64, |acc, (_, &m)| acc.lcm(&m));
            let g = n.gcd(&rest);
            if g > 2 {
                return Verdict::refuted(format!(
                    "Q(zeta_{n}) and the compositum of the others share Q(zeta_{g})"
                ));
            }
        }
        return Verdict::established(format!(
            "cyclotomic fields of conductors {ns:?} meet pairwise in Q"
        ));
    }
    Verdict::inconclusive("linear disjointness is decided only for quadratic or cyclotomic orbit fields")
}

/// The two orbit conditions under which an extension over a number field is
/// non H-parametric for every H with a realization having a rational branch
/// point.
pub fn eval_cor61(e: &ExtensionDescriptor) -> CriterionReport {
    let mut rep = CriterionReport::new("cor61");
    let field = Verdict::from_bool(
        e.field().is_number_field(),
        "k = Q",
        format!("{} is not a number field", e.field().name()),
    );
    let unrecorded = e.orbits().iter().any(|o| matches!(o.locus, Locus::Unspecified(_)));
    let degrees: Vec<u64> = e.orbits().iter().map(|o| o.locus.degree()).collect();
    let s = e.orbits().len();
    rep.note(format!("{s} orbits of sizes {degrees:?}"));

    let (size, disjoint, two) = if unrecorded {
        let why = Verdict::inconclusive("some branch orbits are not recorded");
        (why.clone(), why.clone(), why)
    } else {
        let size = match e.orbits().iter().find(|o| o.locus.degree() < 2) {
            Some(o) => Verdict::refuted(format!("the orbit {} has a single point", o.locus)),
            None => Verdict::established("every orbit has at least two points"),
        };
        let polys: Vec<RatPoly> = e
            .orbits()
            .iter()
            .filter_map(|o| match &o.locus {
                Locus::Poly(p) => Some(p.clone()),
                _ => None,
            })
            .collect();
        let disjoint = if size.is_refuted() {
            Verdict::inconclusive("not needed: some orbit is a single point")
        } else {
            linear_disjointness(&polys)
        };
        let two = Verdict::from_bool(
            s == 2 && degrees == [2, 2],
            "two orbits of two points each",
            format!("orbit sizes {degrees:?}"),
        );
        (size, disjoint, two)
    };
    let c1 = if size.is_refuted() { size.clone() } else { Verdict::all([&size, &disjoint]) };
    rep.push("k is a number field", field.clone());
    rep.push("(1) |O_i| >= 2", size);
    rep.push("(1) F_1, ..., F_s linearly disjoint", disjoint);
    rep.push("(2) s = 2 and |O_1| = |O_2| = 2", two.clone());
    let v = Verdict::all([&field, &Verdict::any([&c1, &two])]);
    rep.with_verdict(v).sufficient()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclotomic;
    use crate::extensions::builders::{cyclotomic_realization, sqrt, sqrt_factored, trinomial_for};

    fn q(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn h2_examples() {
        let s5 = Group::Symmetric(5);
        let triple = trinomial_for(5, 2).unwrap().classes();
        let r = eval_h2_and_fried(&s5, &triple);
        assert!(r.verdict.is_established(), "{}", r.to_text());
        let all = s5.all_classes().unwrap();
        let nontrivial: Vec<ClassLabel> = all.into_iter().filter(|c| c.element_order() > 1).collect();
        let r = eval_h2_and_fried(&s5, &nontrivial);
        assert!(r.condition("(3) (H2)").unwrap().is_refuted());
        // [2 2 1] and [3 1 1] generate only A5
        let r = eval_h2_and_fried(&s5, &[ClassLabel::sn_str("1^1 2^2").unwrap(), ClassLabel::sn_str("1^2 3^1").unwrap()]);
        assert!(r.condition("(1) the classes generate G").unwrap().is_refuted());
        // one half of a split class is not a rational set in A5
        let a5 = Group::Alternating(5);
        let half = ClassLabel::an("5^1".parse().unwrap(), Some(1));
        assert!(eval_h2_and_fried(&a5, std::slice::from_ref(&half)).condition("(2) rational set").unwrap().is_refuted());
        let both = [half, ClassLabel::an("5^1".parse().unwrap(), Some(2))];
        assert!(eval_h2_and_fried(&a5, &both).condition("(2) rational set").unwrap().is_established());
        // large degree: generation by normal closure of representatives
        let s12 = Group::Symmetric(12);
        let r = eval_h2_and_fried(&s12, &[ClassLabel::sn_str("1^10 2^1").unwrap(), ClassLabel::sn_str("12^1").unwrap()]);
        assert!(r.verdict.is_established(), "{}", r.to_text());
    }

    #[test]
    fn cor61_examples() {
        let e = sqrt_factored(&[q(&[-2, 0, 1]), q(&[-3, 0, 1])]).unwrap();
        let r = eval_cor61(&e);
        assert!(r.condition("(1) F_1, ..., F_s linearly disjoint").unwrap().is_established());
        assert!(r.verdict.is_established());
        let e = sqrt_factored(&[q(&[-2, 0, 1]), q(&[-8, 0, 1])]);
        // T^2 - 8 is not squarefree-kernel-distinct: same field Q(sqrt 2)
        let e = e.unwrap();
        let r = eval_cor61(&e);
        assert!(r.condition("(1) F_1, ..., F_s linearly disjoint").unwrap().is_refuted());
        assert!(r.condition("(2) s = 2 and |O_1| = |O_2| = 2").unwrap().is_established());
        assert!(r.verdict.is_established());
        let e = sqrt(&RatPoly::t()).unwrap();
        let r = eval_cor61(&e);
        assert!(r.condition("(1) |O_i| >= 2").unwrap().is_refuted());
        assert!(r.verdict.is_inconclusive());
        // three dependent quadratic fields
        let e = sqrt_factored(&[q(&[-2, 0, 1]), q(&[-3, 0, 1]), q(&[-6, 0, 1])]).unwrap();
        assert!(eval_cor61(&e).verdict.is_inconclusive());
        assert!(eval_cor61(&cyclotomic_realization(7).unwrap()).verdict.is_established());
    }

    #[test]
    fn cyclotomic_disjointness() {
        assert_eq!(cyclotomic_index(&cyclotomic(12)), Some(12));
        assert_eq!(cyclotomic_index(&q(&[-2, 0, 1])), None);
        let e = sqrt_factored(&[cyclotomic(5), cyclotomic(7)]).unwrap();
        assert!(eval_cor61(&e).verdict.is_established());
        let e = sqrt_factored(&[cyclotomic(5), cyclotomic(15)]).unwrap();
        assert!(eval_cor61(&e).condition("(1) F_1, ..., F_s linearly disjoint").unwrap().is_refuted());
        // Q(zeta_3) = Q(zeta_6): two quadratic orbits with the same field
        let e = sqrt_factored(&[cyclotomic(3), cyclotomic(6)]).unwrap();
        let r = eval_cor61(&e);
        assert!(r.condition("(1) F_1, ..., F_s linearly disjoint").unwrap().is_refuted());
        assert!(r.verdict.is_established());
    }

    #[test]
    fn f2_rank_basics() {
        let s = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<BTreeSet<_>>();
        assert_eq!(f2_rank(vec![s(&[2]), s(&[3]), s(&[2, 3])]), 2);
        assert_eq!(f2_rank(vec![s(&[-1]), s(&[2]), s(&[-1, 2, 5])]), 3);
    }
}
