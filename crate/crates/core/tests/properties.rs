use proptest::prelude::*;

use qbranch_core::macdonald::qbinom::{qbinom_recursion, qbinom_skewq};
use qbranch_core::partitions::Partition;
use qbranch_core::ring::{parse_ratfunc, RatFunc, Symbol};

/// A small Laurent polynomial in q, t, x1 from (coefficient, exponents) terms.
fn poly(terms: &[(i64, i32, i32, i32)]) -> RatFunc {
    terms.iter().fold(RatFunc::zero(), |acc, &(c, i, j, k)| {
        acc.add(&RatFunc::int(c).mul(&RatFunc::qt(i, j)).mul(&RatFunc::var_pow(Symbol::letter(1), k)))
    })
}

fn terms() -> impl Strategy<Value = Vec<(i64, i32, i32, i32)>> {
    prop::collection::vec((-3i64..=3, -2i32..=3, 0i32..=2, 0i32..=2), 1..4)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (terms(), terms()).prop_filter_map("zero denominator", |(n, d)| poly(&n).div(&poly(&d)).ok())
}

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a.clone());
        }
    }

    #[test]
    fn canonical_text_round_trips(a in ratfunc()) {
        let s = a.to_canonical();
        let back = parse_ratfunc(&s).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_canonical(), s);
    }

    #[test]
    fn conjugation_is_an_involution(lam in partition(5, 5)) {
        let c = lam.conjugate();
        prop_assert_eq!(c.weight(), lam.weight());
        prop_assert_eq!(c.conjugate(), lam);
    }

    #[test]
    fn qbinom_boundary_values(lam in partition(3, 3)) {
        let one = RatFunc::one();
        prop_assert_eq!(qbinom_skewq(&lam, &lam).unwrap(), one.clone());
        prop_assert_eq!(qbinom_skewq(&lam, &Partition::empty()).unwrap(), one);
        let l = lam.len().max(1);
        for mu in [Partition::empty(), lam.clone()] {
            prop_assert_eq!(qbinom_recursion(&lam, &mu, l).unwrap(), qbinom_skewq(&lam, &mu).unwrap());
        }
    }
}
