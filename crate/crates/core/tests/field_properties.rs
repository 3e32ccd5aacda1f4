use kfock::exact::{BigRat, Field, LaurentPoly2, Mono, RatFun2};
use kfock::partitions::{partitions_of, Partition};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec((-2i32..3, -2i32..3, -4i64..5), 0..4).prop_map(|ts| {
        LaurentPoly2::from_terms(
            ts.into_iter()
                .map(|(a, b, c)| (Mono::new(a, b), BigRat::from_int(c))),
        )
    })
}

fn ratfun() -> impl Strategy<Value = RatFun2> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| RatFun2::new(n, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert!((a.clone() - &a).is_zero());
    }

    #[test]
    fn inverses(a in ratfun()) {
        if a.is_zero() {
            prop_assert!(a.recip().is_err());
        } else {
            prop_assert!((a.clone() * &a.recip().unwrap()).is_one());
            prop_assert_eq!(Field::powi(&a, -2).unwrap() * &a * &a, RatFun2::one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfun(), b in ratfun()) {
        let (x, y) = (BigRat::new(3, 7), BigRat::new(-5, 11));
        if let (Ok(u), Ok(v)) = (a.eval(&x, &y), b.eval(&x, &y)) {
            prop_assert_eq!((a.clone() * &b).eval(&x, &y).unwrap(), u.clone() * &v);
            prop_assert_eq!((a + &b).eval(&x, &y).unwrap(), u + &v);
        }
    }

    #[test]
    fn canonical_form_is_unique(a in ratfun(), b in ratfun()) {
        // equal values print identically
        let c = (a.clone() * &b) + &a;
        let d = a.clone() * &(b + &RatFun2::one());
        prop_assert_eq!(c.to_string(), d.to_string());
    }

    #[test]
    fn conjugation_is_an_involution(n in 0usize..9, k in 0usize..30) {
        let ps = partitions_of(n);
        let lam: &Partition = &ps[k % ps.len()];
        prop_assert_eq!(&lam.conjugate().conjugate(), lam);
        prop_assert_eq!(lam.conjugate().size(), n);
    }
}
