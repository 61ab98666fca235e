use proptest::prelude::*;

use super::*;

fn poly2() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec((-3i32..=3, -3i32..=3, -4i64..=4), 0..5)
        .prop_map(|ts| LaurentPoly2::from_terms(ts.into_iter().map(|(a, b, c)| (RsMono::new(a, b), c))))
}

fn nonzero_poly2() -> impl Strategy<Value = LaurentPoly2> {
    poly2().prop_filter("nonzero", |p| !p.is_zero())
}

fn localized() -> impl Strategy<Value = LocalizedPoly> {
    (poly2(), 0u32..3).prop_map(|(p, k)| LocalizedPoly::new(p, k))
}

fn spec() -> impl Strategy<Value = Specialization> {
    (any::<bool>(), 1u32..=3).prop_map(|(osp, n)| {
        if osp {
            Specialization::osp(n)
        } else {
            Specialization::so(n)
        }
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly2(), b in poly2(), c in poly2()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn stored_coefficients_are_nonzero(a in poly2(), b in poly2()) {
        let prod = &a * &b;
        let exps: Vec<_> = prod.terms().iter().map(|(m, _)| *m).collect();
        prop_assert!(prod.terms().iter().all(|(_, c)| *c != 0.into()));
        prop_assert!(exps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn divide_exact_inverts_mul(a in poly2(), d in nonzero_poly2()) {
        prop_assert_eq!((&a * &d).divide_exact(&d), Ok(a));
    }

    #[test]
    fn localized_normal_form(a in localized(), b in localized()) {
        let z = LaurentPoly2::z();
        for v in [&a + &b, &a * &b, &a - &b] {
            prop_assert!(v.denominator_power() == 0 || v.numerator().divide_exact(&z).is_err());
        }
    }

    #[test]
    fn localized_ring_axioms(a in localized(), b in localized(), c in localized()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn rational_equality_is_equivalence(p in poly2(), d1 in nonzero_poly2(), d2 in nonzero_poly2()) {
        let a = RationalFn2::new(&p * &d1, d1.clone());
        let b = RationalFn2::from(p.clone());
        let c = RationalFn2::new(&p * &d2, d2.clone());
        prop_assert!(a == a.clone());
        prop_assert!(a == b && b == a);
        prop_assert!(a == c && c == b);
    }

    #[test]
    fn specialize_is_homomorphism(a in poly2(), b in poly2(), sp in spec()) {
        prop_assert_eq!((&a * &b).specialize(sp), &a.specialize(sp) * &b.specialize(sp));
        prop_assert_eq!((&a + &b).specialize(sp), &a.specialize(sp) + &b.specialize(sp));
    }

    #[test]
    fn specialize_localized_is_homomorphism(a in localized(), b in localized(), sp in spec()) {
        let lhs = (&a * &b).specialize(sp).to_rational();
        let rhs = &a.specialize(sp).to_rational() * &b.specialize(sp).to_rational();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_vars_is_involutive_homomorphism(a in poly2(), b in poly2()) {
        prop_assert_eq!(a.flip_vars().flip_vars(), a.clone());
        prop_assert_eq!((&a * &b).flip_vars(), &a.flip_vars() * &b.flip_vars());
        prop_assert_eq!((&a + &b).flip_vars(), &a.flip_vars() + &b.flip_vars());
    }

    #[test]
    fn flip_then_so_is_osp(e_r in -4i32..=4, e_s in -4i32..=4, c in -3i64..=3, n in 1u32..=3) {
        let m = LaurentPoly2::monomial(RsMono::new(e_r, e_s), c);
        prop_assert_eq!(
            m.flip_vars().specialize(Specialization::so(n)),
            m.specialize(Specialization::osp(n))
        );
    }
}
