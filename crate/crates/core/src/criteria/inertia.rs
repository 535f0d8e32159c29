//! The Branch Point Criterion and the three Inertia Criteria.

use super::hypotheses::{
    avoids_closure, census_witnesses, known_irrational, m_product, rational_point_note, Closure,
    FusionMap, GOOD_PRIME_NOTE,
};
use super::{CriterionReport, Verdict};
use crate::extensions::{ExtensionDescriptor, Locus};
use crate::groups::{is_g_complete, GroupError};

/// (IC1-1): every branch point of E1 is k-rational.
fn all_rational(e1: &ExtensionDescriptor) -> Verdict {
    if let Some(o) = e1.orbits().iter().find(|o| known_irrational(o)) {
        return Verdict::refuted(format!("{} ({}) is not k-rational", o.locus, o.class));
    }
    if let Some(o) = e1.orbits().iter().find(|o| !o.rational) {
        return Verdict::inconclusive(format!(
            "rationality of {} ({}) is not recorded",
            o.locus, o.class
        ));
    }
    Verdict::established(format!("all {} branch points of {} are k-rational", e1.branch_point_count(), e1.label()))
}

/// (IC1-3): the inertia classes of E1 form a g-complete set.
pub(crate) fn g_complete(e1: &ExtensionDescriptor) -> Verdict {
    let group = e1.group();
    let pg = match group.perm_group() {
        Ok(pg) => pg,
        Err(e) => return Verdict::inconclusive(format!("g-completeness needs an enumerable group: {e}")),
    };
    let idx: Result<Vec<usize>, GroupError> = e1
        .classes()
        .iter()
        .map(|c| group.class_index(&pg, c))
        .collect();
    let result = idx.and_then(|idx| is_g_complete(&pg, &idx));
    match result {
        Ok(g) if g.complete => Verdict::established(format!(
            "no proper subgroup of {} meets every class of {}",
            group.name(),
            e1.label()
        )),
        Ok(g) => {
            let w: Vec<String> = g.witness.unwrap_or_default().iter().map(|p| p.to_string()).collect();
            Verdict::refuted(format!("the tuple ({}) generates a proper subgroup", w.join(", ")))
        }
        Err(e) => Verdict::inconclusive(format!("g-completeness not decided: {e}")),
    }
}

/// Sub-verdicts for "some admissible orbit of E1 avoids the power closure of
/// E2"; with `rational_only`, orbits not known to be rational can only make
/// the condition inconclusive.
fn some_orbit_avoids(
    e1: &ExtensionDescriptor,
    e2: &ExtensionDescriptor,
    fusion: Option<&FusionMap>,
    rational_only: bool,
    trace: &mut Vec<String>,
) -> Verdict {
    let closure = Closure::of(e2);
    let mut per = Vec::new();
    for o in e1.orbits() {
        if rational_only && known_irrational(o) {
            continue;
        }
        let v = avoids_closure(o, e1, e2, &closure, fusion, trace);
        trace.push(format!("{} at {}: {v}", o.class, o.locus));
        if rational_only && !o.rational && v.is_established() {
            per.push(Verdict::inconclusive(format!(
                "{} avoids, but {} is not known to be k-rational",
                o.class, o.locus
            )));
        } else {
            per.push(v);
        }
    }
    if per.is_empty() {
        return Verdict::refuted(format!("{} has no k-rational branch point", e1.label()));
    }
    Verdict::any(&per)
}

/// Inertia Criterion 1, 2 or 3 applied to (E1, E2).
pub fn eval_inertia_criterion(
    variant: u8,
    e1: &ExtensionDescriptor,
    e2: &ExtensionDescriptor,
    fusion: Option<&FusionMap>,
) -> CriterionReport {
    let mut rep = CriterionReport::new(format!("ic{variant}"));
    let field = e1.field();
    match variant {
        1 => {
            rep.push("(IC1-1)", all_rational(e1));
            let v = some_orbit_avoids(e1, e2, fusion, false, &mut rep.trace);
            rep.push("(IC1-2)", v);
            rep.push("(IC1-3)", g_complete(e1));
        }
        2 => {
            let v = some_orbit_avoids(e1, e2, fusion, true, &mut rep.trace);
            rep.push("(IC2-1)", v);
            rep.push(
                "(IC2-2)",
                Verdict::from_bool(
                    field.hilbertian(),
                    format!("{} is hilbertian", field.name()),
                    format!("{} is not known to be hilbertian", field.name()),
                ),
            );
        }
        3 => {
            let v = some_orbit_avoids(e1, e2, fusion, false, &mut rep.trace);
            rep.push("(IC3-1)", v);
            rep.push(
                "(IC3-2)",
                Verdict::from_bool(
                    field.number_or_function_field(),
                    format!("k is {}", field.name()),
                    format!(
                        "k is an {}, neither a number field nor a finite extension of kappa(X)",
                        field.name()
                    ),
                ),
            );
        }
        _ => {
            return rep.with_verdict(Verdict::inconclusive(format!(
                "no inertia criterion {variant}; use 1, 2 or 3"
            )))
        }
    }
    rep.conclude_all().sufficient()
}

/// Branch Point Criterion applied to (E1, E2).
pub fn eval_branch_point_criterion(
    e1: &ExtensionDescriptor,
    e2: &ExtensionDescriptor,
    prime_bound: u64,
    min_witnesses: usize,
) -> CriterionReport {
    let mut rep = CriterionReport::new("bpc");
    let field = e1.field();
    let bpc1 = if field.is_number_field() {
        Verdict::established("k = Q is a number field")
    } else if field.hilbertian() {
        Verdict::established(format!("{} is hilbertian (replacement allowed by the addendum)", field.name()))
    } else {
        Verdict::refuted(format!("{} is neither a number field nor hilbertian", field.name()))
    };
    rep.push("(BPC-1)", bpc1);

    let bpc2 = if let Some(o) = e1.orbits().iter().find(|o| o.rational) {
        Verdict::established(format!("{} ({}) is k-rational", o.locus, o.class))
    } else if e1.orbits().iter().any(|o| matches!(o.locus, Locus::Unspecified(_))) {
        Verdict::inconclusive(format!("no branch point of {} is known to be k-rational", e1.label()))
    } else {
        Verdict::refuted(format!("{} has no k-rational branch point", e1.label()))
    };
    rep.push("(BPC-2)", bpc2);

    let bpc3 = if !e2.field().is_number_field() {
        Verdict::inconclusive("arithmetic only over Q")
    } else if let Some(note) = rational_point_note(e2) {
        rep.note(note);
        Verdict::inconclusive(format!(
            "{} has a k-rational branch point, so (BPC-3) cannot hold",
            e2.label()
        ))
    } else {
        match m_product(e2) {
            Err(e) => Verdict::inconclusive(e),
            Ok(p2) => {
                rep.note(format!("m·m* for {}: {p2}", e2.label()));
                match census_witnesses(None, &p2, prime_bound) {
                    Ok(w) if w.len() >= min_witnesses => Verdict::empirical(prime_bound, w),
                    Ok(w) => Verdict::inconclusive(format!(
                        "only {} non-divisor primes up to {prime_bound} (need {min_witnesses})",
                        w.len()
                    )),
                    Err(e) => Verdict::inconclusive(e),
                }
            }
        }
    };
    rep.push("(BPC-3)", bpc3);
    rep.note(GOOD_PRIME_NOTE);
    rep.conclude_all().sufficient()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RatPoly;
    use crate::extensions::builders::{class_data, morse, sqrt, sqrt_factored, trinomial_for};
    use crate::extensions::FieldKind;
    use crate::groups::{ClassLabel, Group};

    fn morse5() -> ExtensionDescriptor {
        morse(&RatPoly::from_ints(&[0, 1, 0, 0, 0, 1])).unwrap()
    }

    #[test]
    fn ic1_trinomial_against_morse_is_exact() {
        let r = eval_inertia_criterion(1, &trinomial_for(5, 2).unwrap(), &morse5(), None);
        assert!(r.verdict.is_established(), "{}", r.to_text());
        assert!(r.conditions.iter().all(|c| c.verdict.is_established()));
        // E2 = trinomial with [1^1 4^1]; the Morse classes are no obstruction
        let r = eval_inertia_criterion(1, &trinomial_for(5, 1).unwrap(), &morse5(), None);
        assert!(r.verdict.is_established());
        // Morse E1 has irrational branch points
        let r = eval_inertia_criterion(1, &morse5(), &trinomial_for(5, 2).unwrap(), None);
        assert!(r.condition("(IC1-1)").unwrap().is_refuted());
    }

    #[test]
    fn ic2_rigid_orders() {
        let th = Group::Abstract {
            name: "Th".into(),
            class_orders: [("2A", 2), ("3A", 3), ("19A", 19)].iter().map(|(n, o)| (n.to_string(), *o)).collect(),
        };
        let b = Group::Abstract {
            name: "B".into(),
            class_orders: [("2C", 2), ("3A", 3), ("55A", 55)].iter().map(|(n, o)| (n.to_string(), *o)).collect(),
        };
        let e1 = class_data(
            "Th",
            th,
            vec![
                (ClassLabel::named("2A", 2), true),
                (ClassLabel::named("3A", 3), true),
                (ClassLabel::named("19A", 19), true),
            ],
        )
        .unwrap();
        let e2 = class_data(
            "B",
            b,
            vec![
                (ClassLabel::named("2C", 2), false),
                (ClassLabel::named("3A", 3), false),
                (ClassLabel::named("55A", 55), false),
            ],
        )
        .unwrap();
        let r = eval_inertia_criterion(2, &e1, &e2, None);
        assert!(r.verdict.is_established(), "{}", r.to_text());
        let r = eval_inertia_criterion(3, &e1.clone().with_field(FieldKind::AbstractHilbertian { infinite_prime_divisors: false }), &e2, None);
        assert!(r.condition("(IC3-2)").unwrap().is_refuted());
        assert!(r.verdict.is_inconclusive());
        assert!(eval_inertia_criterion(4, &e1, &e2, None).verdict.is_inconclusive());
    }

    #[test]
    fn bpc_examples() {
        let t = sqrt(&RatPoly::t()).unwrap();
        let r = eval_branch_point_criterion(&t, &sqrt(&RatPoly::from_ints(&[1, 0, 1])).unwrap(), 200, 10);
        match &r.verdict {
            Verdict::EmpiricallySupported { witnesses, .. } => assert!(witnesses.iter().all(|p| p % 4 == 3)),
            v => panic!("{v}"),
        }
        let e2 = sqrt_factored(&[RatPoly::from_ints(&[-2, 0, 1]), RatPoly::from_ints(&[-3, 0, 1])]).unwrap();
        let r = eval_branch_point_criterion(&t, &e2, 500, 5);
        match &r.condition("(BPC-3)").unwrap() {
            Verdict::EmpiricallySupported { witnesses, .. } => {
                // both 2 and 3 non-residues
                for &p in witnesses {
                    assert_eq!(crate::algebra::jacobi(2, p), -1);
                    assert_eq!(crate::algebra::jacobi(3, p), -1);
                }
            }
            v => panic!("{v}"),
        }
        let r = eval_branch_point_criterion(&t, &t, 200, 1);
        assert!(r.condition("(BPC-3)").unwrap().is_inconclusive());
    }
}
