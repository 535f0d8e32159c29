//! The general S_n and A_n results: membership of a few cycle types in the
//! class list decides non-parametricity through an inertia criterion applied
//! against a known realization.

use std::collections::BTreeSet;

use num_integer::Integer;

use super::{CriterionReport, Verdict};
use crate::algebra::factor_u64;
use crate::extensions::{ExtensionDescriptor, FieldKind};
use crate::groups::{CycleType, Group};

fn ct(lengths: &[u64]) -> CycleType {
    CycleType::from_lengths(lengths)
}

fn phi(n: u64) -> u64 {
    factor_u64(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// `I_n`: the m in 1..n prime to n (m = n only for n = 1).
fn units(n: u64) -> Vec<u64> {
    (1..n).filter(|m| m.gcd(&n) == 1).collect()
}

/// Cycle types occurring in the class list; split A_n classes count once.
fn types(e: &ExtensionDescriptor) -> BTreeSet<CycleType> {
    e.classes().iter().filter_map(|c| c.cycle_type()).collect()
}

fn absent(present: &BTreeSet<CycleType>, c: &CycleType, via: &str) -> Verdict {
    Verdict::from_bool(
        !present.contains(c),
        format!("[{c}] is not an inertia class; compare with {via}"),
        format!("[{c}] is an inertia class"),
    )
}

fn some_m(n: u64, ms: impl IntoIterator<Item = u64>, present: &BTreeSet<CycleType>, f: impl Fn(u64) -> (CycleType, String)) -> Verdict {
    let mut seen = Vec::new();
    for m in ms {
        let (c, via) = f(m);
        if !present.contains(&c) {
            return Verdict::established(format!("m = {m}: [{c}] is not an inertia class; compare with {via}"));
        }
        seen.push(format!("[{c}]"));
    }
    if seen.is_empty() {
        return Verdict::refuted(format!("no admissible m for n = {n}"));
    }
    Verdict::refuted(format!("every candidate is an inertia class: {}", seen.join(", ")))
}

fn not_applicable(why: impl Into<String>) -> Verdict {
    Verdict::refuted(why)
}

fn degree_of(e: &ExtensionDescriptor, want_alternating: bool) -> Result<u64, Verdict> {
    match (e.group(), want_alternating) {
        (Group::Symmetric(n), false) | (Group::Alternating(n), true) => Ok(*n),
        (g, _) => Err(Verdict::inconclusive(format!(
            "{} is not {}",
            g.name(),
            if want_alternating { "an alternating group" } else { "a symmetric group" }
        ))),
    }
}

/// The general S_n result: E is geometrically non S_n-parametric as soon as
/// one of three membership conditions holds.
pub fn eval_sn_general(e: &ExtensionDescriptor, field: &FieldKind) -> CriterionReport {
    let mut rep = CriterionReport::new("sn_general");
    let n = match degree_of(e, false) {
        Ok(n) => n,
        Err(v) => return rep.with_verdict(v),
    };
    if n < 4 {
        return rep.with_verdict(Verdict::inconclusive(format!(
            "n = {n} is outside the range n >= 4 (the statement fails for n = 3)"
        )));
    }
    let present = types(e);
    rep.note(format!(
        "inertia classes: {}",
        present.iter().map(|c| format!("[{c}]")).collect::<Vec<_>>().join(", ")
    ));

    let c1 = absent(&present, &ct(&[n]), "E_2 under (IC1)");
    let c2 = some_m(n, units(n), &present, |m| {
        (ct(&[m, n - m]), format!("E_2 with m = {m} under (IC1)"))
    });
    let c3 = if !field.hilbertian() {
        not_applicable(format!("{} is not known to be hilbertian", field.name()))
    } else if n < 6 || n % 2 == 1 {
        not_applicable(format!("needs n >= 6 even, n = {n}"))
    } else {
        absent(&present, &ct(&[1, 1, n - 2]), "E_3 under (IC2)")
    };
    let r = e.branch_point_count();
    let bound = Verdict::from_bool(
        2 * r <= phi(n),
        format!("r = {r} <= phi({n})/2 = {}", phi(n) / 2),
        format!("r = {r} > phi({n})/2 = {}", phi(n) / 2),
    );
    rep.push("(1) [n^1] not in the class list", c1);
    rep.push("(2) [m^1 (n-m)^1] not in the class list for some m in I_n", c2);
    rep.push("(3) k hilbertian, n >= 6 even, [1^2 (n-2)^1] not in the class list", c3);
    rep.push("r <= phi(n)/2", bound);
    rep.conclude_any().sufficient()
}

/// The general A_n result, for both field regimes. Split classes are matched
/// by cycle type, so the conditions do not depend on the labelling of the
/// two halves.
pub fn eval_an_general(e: &ExtensionDescriptor, field: &FieldKind) -> CriterionReport {
    let mut rep = CriterionReport::new("an_general");
    let n = match degree_of(e, true) {
        Ok(n) => n,
        Err(v) => return rep.with_verdict(v),
    };
    if n < 4 {
        return rep.with_verdict(Verdict::inconclusive(format!("n = {n} is outside the range n >= 4")));
    }
    let present = types(e);
    rep.note(format!(
        "inertia cycle types: {}",
        present.iter().map(|c| format!("[{c}]")).collect::<Vec<_>>().join(", ")
    ));
    let odd = n % 2 == 1;

    let hilb = Verdict::from_bool(
        field.hilbertian(),
        format!("{} is hilbertian", field.name()),
        format!("{} is not known to be hilbertian", field.name()),
    );
    let a1 = if odd {
        some_m(n, units(n).into_iter().filter(|m| m % 2 == 1), &present, |m| {
            (ct(&[m, (n - m) / 2, (n - m) / 2]), format!("E'_2 with m = {m} under (IC2)"))
        })
    } else {
        not_applicable("n is even")
    };
    let b1 = if odd {
        some_m(n, units(n).into_iter().filter(|m| m % 2 == 0), &present, |m| {
            (ct(&[m / 2, m / 2, n - m]), format!("E'_2 with m = {m} under (IC2)"))
        })
    } else {
        not_applicable("n is odd")
    };
    let c1 = if odd {
        not_applicable("n is odd")
    } else {
        absent(&present, &ct(&[n / 2, n / 2]), "E'_2 under (IC2)")
    };
    let d1 = if odd || n < 8 {
        not_applicable(format!("needs n >= 8 even, n = {n}"))
    } else {
        let x = ct(&[2, n - 2]);
        let y = ct(&[1, 1, (n - 2) / 2, (n - 2) / 2]);
        Verdict::from_bool(
            !present.contains(&x) && !present.contains(&y),
            format!("neither [{x}] nor [{y}] is an inertia class; compare with E'_3 under (IC2)"),
            format!("[{x}] or [{y}] is an inertia class"),
        )
    };

    let nf = Verdict::from_bool(
        field.number_or_function_field(),
        format!("k is {}", field.name()),
        format!("{} is neither a number field nor a finite extension of kappa(X)", field.name()),
    );
    let a2 = if odd {
        absent(&present, &ct(&[n]), "E'_2 under (IC3)")
    } else {
        not_applicable("n is even")
    };
    let b2 = if odd {
        not_applicable("n is odd")
    } else {
        some_m(n, units(n), &present, |m| (ct(&[m, n - m]), format!("E'_2 with m = {m} under (IC3)")))
    };
    let c2 = if n == 6 {
        let x = ct(&[2, 4]);
        let y = ct(&[1, 1, 2, 2]);
        Verdict::from_bool(
            !present.contains(&x) && !present.contains(&y),
            format!("neither [{x}] nor [{y}] is an inertia class; compare with E'_3 under (IC3)"),
            format!("[{x}] or [{y}] is an inertia class"),
        )
    } else {
        not_applicable("n != 6")
    };
    let r = e.branch_point_count();
    let bound = Verdict::from_bool(
        2 * r <= phi(n),
        format!("r = {r} <= phi({n})/2 = {}", phi(n) / 2),
        format!("r = {r} > phi({n})/2 = {}", phi(n) / 2),
    );

    let part1 = Verdict::all([&hilb, &Verdict::any([&a1, &b1, &c1, &d1])]);
    let part2 = Verdict::all([&nf, &Verdict::any([&a2, &b2, &c2])]);
    let part3 = Verdict::all([&nf, &bound]);
    rep.push("(1) k hilbertian", hilb);
    rep.push("(1)-(a)", a1);
    rep.push("(1)-(b)", b1);
    rep.push("(1)-(c)", c1);
    rep.push("(1)-(d)", d1);
    rep.push("(2) k number field or finite over kappa(X)", nf);
    rep.push("(2)-(a)", a2);
    rep.push("(2)-(b)", b2);
    rep.push("(2)-(c)", c2);
    rep.push("r <= phi(n)/2", bound);
    rep.with_verdict(Verdict::any([&part1, &part2, &part3])).sufficient()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::builders::{
        an_five_point_data, an_three_cycle_data, an_trinomial_data, class_data, morse_data, sn_four_point_data,
        trinomial_for,
    };
    use crate::groups::ClassLabel;

    const Q: FieldKind = FieldKind::RationalsQ;

    #[test]
    fn sn_known_realizations() {
        for n in 4..=12 {
            let r = eval_sn_general(&morse_data(n).unwrap(), &Q);
            assert!(r.condition("(2) [m^1 (n-m)^1] not in the class list for some m in I_n").unwrap().is_established());
            assert!(r.verdict.is_established());
        }
        for n in [5u64, 7, 8, 9, 10, 11] {
            assert!(eval_sn_general(&trinomial_for(n, 1).unwrap(), &Q).verdict.is_established(), "n = {n}");
        }
        // n = 6: only (3), which needs a hilbertian field
        let e = trinomial_for(6, 1).unwrap();
        let r = eval_sn_general(&e, &Q);
        assert!(r.condition("(1) [n^1] not in the class list").unwrap().is_refuted());
        assert!(r.condition("(3) k hilbertian, n >= 6 even, [1^2 (n-2)^1] not in the class list").unwrap().is_established());
        let not_hilbertian = FieldKind::AbstractDedekindFraction { hilbertian: false, infinite_prime_divisors: true };
        assert!(eval_sn_general(&e, &not_hilbertian).verdict.is_inconclusive());
        assert!(eval_sn_general(&e, &FieldKind::FunctionFieldOverAlgClosedChar0).verdict.is_established());
        // n = 4: phi(4) = 2, the single trinomial class [1 3] is present
        assert!(eval_sn_general(&trinomial_for(4, 1).unwrap(), &Q).verdict.is_inconclusive());
        for n in [6u64, 8, 10] {
            let r = eval_sn_general(&sn_four_point_data(n).unwrap(), &Q);
            assert!(r.condition("(1) [n^1] not in the class list").unwrap().is_established());
        }
        assert!(eval_sn_general(&trinomial_for(3, 1).unwrap(), &Q).verdict.is_inconclusive());
    }

    #[test]
    fn phi_bound() {
        let e = class_data("one class", Group::Symmetric(12), vec![(ClassLabel::sn_str("12^1").unwrap(), true)]).unwrap();
        let r = eval_sn_general(&e, &Q);
        assert!(r.condition("r <= phi(n)/2").unwrap().is_established());
        assert_eq!(phi(12), 4);
        assert_eq!(units(12), vec![1, 5, 7, 11]);
    }

    #[test]
    fn an_known_realizations() {
        for n in [5u64, 7, 9, 11] {
            let r = eval_an_general(&an_three_cycle_data(n).unwrap(), &Q);
            assert!(r.condition("(1)-(a)").unwrap().is_established(), "n = {n}");
        }
        // n odd, m in {1, n-1} -> (1)-(b); otherwise (1)-(a)
        let r = eval_an_general(&an_trinomial_data(7, 6).unwrap(), &Q);
        assert!(r.condition("(1)-(b)").unwrap().is_established());
        let r = eval_an_general(&an_trinomial_data(7, 3).unwrap(), &Q);
        assert!(r.condition("(1)-(a)").unwrap().is_established());
        for n in [8u64, 10, 12] {
            let r = eval_an_general(&an_trinomial_data(n, 1).unwrap(), &Q);
            assert!(r.condition("(1)-(d)").unwrap().is_established(), "n = {n}");
            let r = eval_an_general(&an_five_point_data(n).unwrap(), &Q);
            assert!(r.condition("(1)-(c)").unwrap().is_established(), "n = {n}");
        }
        let e = an_trinomial_data(6, 1).unwrap();
        let r = eval_an_general(&e, &FieldKind::FunctionFieldOverAlgClosedChar0);
        assert!(r.condition("(2)-(c)").unwrap().is_established());
        assert!(r.verdict.is_established());
        let abstract_field = FieldKind::AbstractHilbertian { infinite_prime_divisors: true };
        assert!(eval_an_general(&e, &abstract_field).verdict.is_inconclusive());
    }
}
