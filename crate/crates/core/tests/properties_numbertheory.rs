mod common;

use galois_param_core::algebra::{cyclotomic, int, ratio, RatPoly};
use galois_param_core::numbertheory::{
    euler_criterion, is_prime_divisor, legendre_symbol, prime_divisor_census, prop31_specialization_point,
    squarefree_kernel, Conic, DivisorVerdict,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    small_rational().prop_filter("nonzero", |q| q != &int(0))
}

fn monic_int(max_deg: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-9i64..=9, 1..=max_deg).prop_map(|mut c| {
        c.push(1);
        RatPoly::from_ints(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conic_points_lie_on_the_conic(
        lead in nonzero_rational(),
        r in small_rational(),
        s in small_rational(),
        d in prop::sample::select(vec![-7i64, -3, -1, 2, 3, 5, 6, 10, 15]),
        lambda in small_rational(),
    ) {
        prop_assume!(r != s);
        // lead (T - r)(T - s), so the base point (r, 0) is rational
        let b = -(&lead * (&r + &s));
        let c = &lead * &r * &s;
        let conic = Conic::new(lead.clone(), b.clone(), c.clone(), int(d), (r.clone(), int(0))).unwrap();
        if let Some((t, y)) = conic.point(&lambda) {
            prop_assert_eq!(int(d) * &y * &y, &lead * &t * &t + &b * &t + &c);
        }
    }

    #[test]
    fn specialization_points_hit_the_target_field(
        lead in nonzero_rational(),
        r in small_rational(),
        s in small_rational(),
        d in (-200i64..=200).prop_filter("nonzero", |d| *d != 0),
    ) {
        prop_assume!(r != s);
        let b = -(&lead * (&r + &s));
        let c = &lead * &r * &s;
        let t0 = prop31_specialization_point(&lead, &b, &c, &BigInt::from(d)).unwrap();
        let value = &lead * &t0 * &t0 + &b * &t0 + &c;
        prop_assert!(common::same_square_class(&value, &BigInt::from(d)), "t0 = {t0}, value = {value}");
    }

    #[test]
    fn squarefree_kernel_is_squarefree_and_in_the_same_class(n in (-100000i64..=100000).prop_filter("nonzero", |n| *n != 0)) {
        let k = squarefree_kernel(&BigInt::from(n)).unwrap();
        let kv: i64 = k.value().try_into().unwrap();
        prop_assert!((2..=316i64).all(|p| kv % (p * p) != 0));
        prop_assert!(common::same_square_class(&int(n), k.value()));
    }

    #[test]
    fn legendre_matches_euler_power(a in -10000i64..=10000, p in prop::sample::select(common::sieve(2000)[1..].to_vec())) {
        let e = common::pow_mod(a, (p - 1) / 2, p);
        let expected = if e == 0 { 0 } else if e == 1 { 1 } else { -1 };
        prop_assert_eq!(legendre_symbol(&BigInt::from(a), p), expected);
        prop_assert_eq!(euler_criterion(&BigInt::from(a), p), expected);
    }

    #[test]
    fn prime_divisor_of_product_iff_of_a_factor(
        p in monic_int(3),
        q in monic_int(3),
        prime in prop::sample::select(common::sieve(300)),
    ) {
        let is_div = |f: &RatPoly| is_prime_divisor(f, prime).unwrap().verdict == DivisorVerdict::Divisor;
        prop_assert_eq!(is_div(&(&p * &q)), is_div(&p) || is_div(&q));
        let report = is_prime_divisor(&p, prime).unwrap();
        if let Some(t) = report.witness {
            prop_assert_eq!(p.eval(&int(t as i64)).numer() % BigInt::from(prime), BigInt::from(0));
        }
    }
}

#[test]
fn cyclotomic_prime_divisors_are_one_mod_n() {
    for n in [3u64, 4, 5, 7, 8, 12] {
        let census = prime_divisor_census(&cyclotomic(n), 10_000).unwrap();
        let top = census.excluded.iter().copied().max().unwrap_or(0).max(n);
        for &p in &census.divisors {
            assert!(p % n == 1 || n % p == 0, "n = {n}: {p}");
        }
        for p in common::sieve(10_000).into_iter().filter(|&p| p > top) {
            assert_eq!(census.divisors.contains(&p), p % n == 1, "n = {n}, p = {p}");
        }
    }
}
