mod common;

use galois_param_core::criteria::parse_small_group;
use galois_param_core::groups::{
    is_rational_class_set, real_tuple_construction, verify_real_tuple, ClassLabel, CycleType, Group, Perm,
    PermGroup,
};
use proptest::prelude::*;

const ZOO: &[&str] = &["Z1", "Z2", "Z3", "Z5", "Z6", "V4", "S3", "D4", "D5", "D6", "A4", "S4", "A5", "Z8", "S5"];

fn perm(max_deg: usize) -> impl Strategy<Value = Perm> {
    (1..=max_deg)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn lengths(p: &Perm) -> Vec<u64> {
    // cycle lengths by walking the images directly
    let img = p.images();
    let mut seen = vec![false; img.len()];
    let mut out = Vec::new();
    for i in 0..img.len() {
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = img[j];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn cycle_type_power_matches_element_power(g in perm(10), a in 1u64..=60) {
        let ga = g.pow(a as i64);
        prop_assert_eq!(CycleType::of(&g).power(a), CycleType::of(&ga));
        prop_assert_eq!(CycleType::of(&ga).lengths(), lengths(&ga));
    }

    #[test]
    fn inverse_and_order(g in perm(10)) {
        prop_assert!(g.mul(&g.inverse()).is_identity());
        prop_assert!(g.pow(g.order() as i64).is_identity());
        prop_assert_eq!(g.is_even(), common::is_even_images(&g.images()));
    }

    #[test]
    fn cycle_types_round_trip_through_text(g in perm(12)) {
        let ct = CycleType::of(&g);
        prop_assert_eq!(ct.to_string().parse::<CycleType>().unwrap(), ct);
    }
}

#[test]
fn class_sizes_partition_the_group() {
    for name in ZOO {
        let g = parse_small_group(name).unwrap();
        let classes = g.conjugacy_classes().unwrap();
        let total: usize = classes.iter().map(|c| c.size).sum();
        assert_eq!(total as u128, g.order(), "{name}");
        for c in classes {
            assert_eq!(g.order() % c.size as u128, 0, "{name}: class of {}", c.representative);
            assert_eq!(c.members.len(), c.size);
        }
    }
}

#[test]
fn power_closure_contains_input_and_identity() {
    for name in ZOO {
        let pg = parse_small_group(name).unwrap();
        let g = Group::Perm(pg.clone());
        let id = g.identity_class().unwrap();
        for c in pg.conjugacy_classes().unwrap() {
            let label = g.normalize(&ClassLabel::explicit(c.representative.clone())).unwrap();
            let closure = g.power_closure(std::slice::from_ref(&label)).unwrap();
            assert!(closure.contains(&label), "{name}");
            assert!(closure.contains(&id), "{name}");
        }
    }
}

#[test]
fn all_classes_form_a_rational_set() {
    for name in ZOO {
        let g = parse_small_group(name).unwrap();
        let all: Vec<usize> = (0..g.conjugacy_classes().unwrap().len()).collect();
        assert!(is_rational_class_set(&g, &all).unwrap(), "{name}");
    }
}

#[test]
fn real_tuples_verify_for_even_order_groups() {
    let mut groups: Vec<PermGroup> = ZOO.iter().map(|n| parse_small_group(n).unwrap()).collect();
    groups.extend((3..=10).map(PermGroup::dihedral));
    groups.extend([2, 4, 6, 10, 12].map(PermGroup::cyclic));
    for g in groups.iter().filter(|g| g.order() % 2 == 0 && g.order() <= 120) {
        let rt = real_tuple_construction(g).unwrap();
        assert!(verify_real_tuple(g, &rt.tuple).ok(), "order {} degree {}", g.order(), g.degree());
        // product one, checked by hand
        let prod = rt.tuple[1..].iter().fold(g.identity(), |acc, x| acc.mul(x));
        assert!(prod.is_identity());
    }
}
