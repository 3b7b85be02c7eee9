use num_bigint::BigInt;
use proptest::prelude::*;

use sgdigit::ld::remove_generator_direct;
use sgdigit::oracle::{brute_length, brute_numerical_semigroups};
use sgdigit::{
    is_ld, is_ld_direct, is_ld_positive_criterion, Base, DigitString, LdClass, LengthTable,
    Submonoid,
};

fn any_base() -> impl Strategy<Value = i64> {
    prop_oneof![2i64..=16, -16i64..=-2]
}

fn small_monoid() -> impl Strategy<Value = Submonoid> {
    prop::collection::vec(2u64..40, 1..5).prop_filter_map("gcd must be 1", |mut gens| {
        gens.push(41);
        Submonoid::from_generators(gens).ok()
    })
}

proptest! {
    #[test]
    fn digits_round_trip(b in any_base(), z in any::<i64>()) {
        let base = Base::new(b).unwrap();
        let z = if b > 0 { BigInt::from(z.unsigned_abs()) } else { BigInt::from(z) };
        let ds = base.to_digits(&z).unwrap();
        prop_assert_eq!(base.from_digits(ds.digits()).unwrap(), z.clone());
        prop_assert!(ds.digits().iter().all(|&u| base.is_digit(u)));
        let parsed: DigitString = ds.to_string().parse().unwrap();
        prop_assert_eq!(parsed.value(), &z);
    }

    #[test]
    fn length_matches_division(b in any_base(), z in -1_000_000_000i64..1_000_000_000) {
        let z = if b > 0 { z.abs() } else { z };
        let base = Base::new(b).unwrap();
        let exact = base.length(&BigInt::from(z)).unwrap();
        prop_assert_eq!(exact, brute_length(b, z.into()).unwrap());
        prop_assert_eq!(exact, LengthTable::new(base).length(z.into()).unwrap());
        if z != 0 {
            prop_assert!(base.delta_band(exact).unwrap().contains(&BigInt::from(z)));
        }
    }

    #[test]
    fn negative_base_parity(b in -16i64..=-2, z in any::<i64>().prop_filter("nonzero", |&z| z != 0)) {
        let len = Base::new(b).unwrap().length(&BigInt::from(z)).unwrap();
        prop_assert_eq!(len % 2 == 1, z > 0);
    }

    #[test]
    fn negation_changes_length_by_one(b in -16i64..=-2, a in 1i64..i64::MAX / 2) {
        let base = Base::new(b).unwrap();
        let pos = i64::from(base.length(&BigInt::from(a)).unwrap());
        let neg = i64::from(base.length(&BigInt::from(-a)).unwrap());
        prop_assert_eq!((neg - pos).abs(), 1);
    }

    #[test]
    fn lengths_are_monotone(b in any_base(), a in 0i64..1 << 40, d in 0i64..1 << 20) {
        let table = LengthTable::new(Base::new(b).unwrap());
        prop_assert!(table.length(a.into()).unwrap() <= table.length((a + d).into()).unwrap());
        if b < 0 && a > 0 {
            prop_assert!(table.length((-a - d).into()).unwrap() >= table.length((-a).into()).unwrap());
        }
    }

    #[test]
    fn length_is_logarithmic(b in 2i64..=16, z in 1u64..u64::MAX) {
        // |b|^(ℓ-1) <= z < |b|^ℓ for positive bases.
        let len = Base::new(b).unwrap().length(&BigInt::from(z)).unwrap();
        let b = BigInt::from(b);
        prop_assert!(num_traits::pow(b.clone(), len as usize - 1) <= BigInt::from(z));
        prop_assert!(BigInt::from(z) < num_traits::pow(b, len as usize));
    }

    #[test]
    fn msg_is_idempotent(s in small_monoid()) {
        let again = Submonoid::from_generators(s.gens().iter().copied()).unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert!(s.members_upto(200).eq(again.members_upto(200)));
        for &g in s.gens() {
            prop_assert!(!(1..g).any(|a| s.contains(a) && s.contains(g - a)));
        }
    }

    #[test]
    fn factorization_length_is_superadditive(s in small_monoid(), x in 0u64..120, y in 0u64..120) {
        prop_assume!(s.contains(x) && s.contains(y));
        let p = |v| s.max_fact_length(v).unwrap();
        prop_assert!(p(x + y) >= p(x) + p(y));
    }

    #[test]
    fn intersection_is_pointwise_and(s in small_monoid(), t in small_monoid()) {
        let both = s.intersect(&t).unwrap();
        for x in 0..200 {
            prop_assert_eq!(both.contains(x), s.contains(x) && t.contains(x));
        }
    }

    #[test]
    fn tail_monoids(n in 2u64..200) {
        let s = Submonoid::tail(n).unwrap();
        prop_assert_eq!(s.frobenius().unwrap(), n as i64 - 1);
        prop_assert_eq!(s.genus().unwrap() as u64, n - 1);
        let expected: Vec<u64> = (n..2 * n).collect();
        prop_assert_eq!(s.gens(), expected.as_slice());
    }
}

#[test]
fn expansions_are_unique_for_small_bases() {
    for b in [2i64, 3, -2, -3] {
        let base = Base::new(b).unwrap();
        let radix = b.unsigned_abs();
        let mut seen = std::collections::HashMap::new();
        for len in 1..=6u32 {
            for code in 0..radix.pow(len) {
                let digits: Vec<u64> = (0..len).map(|i| code / radix.pow(i) % radix).collect();
                if len > 1 && digits[len as usize - 1] == 0 {
                    continue;
                }
                let value = base.from_digits(&digits).unwrap();
                assert_eq!(base.to_digits(&value).unwrap().digits(), digits.as_slice());
                assert!(seen.insert(value, digits).is_none(), "b = {b}");
            }
        }
    }
}

#[test]
fn criteria_agree_up_to_genus_twelve() {
    for s in brute_numerical_semigroups(12).unwrap() {
        for cls in [LdClass::L, LdClass::LMinus] {
            assert_eq!(
                is_ld(&s, cls).unwrap(),
                is_ld_direct(&s, cls).unwrap(),
                "{s} {cls}"
            );
        }
        assert_eq!(
            is_ld(&s, LdClass::L).unwrap(),
            is_ld_positive_criterion(&s).unwrap(),
            "{s}"
        );
    }
}

#[test]
fn removal_rule_on_lminus_tree() {
    for s in sgdigit::enumerate_by_genus(LdClass::LMinus, 9).unwrap() {
        if s.contains(3) || s.is_naturals() {
            continue;
        }
        for &g in s.gens() {
            assert_eq!(
                sgdigit::remove_generator_ok(&s, g).unwrap(),
                remove_generator_direct(&s, g).unwrap(),
                "{s} minus {g}"
            );
        }
    }
}
