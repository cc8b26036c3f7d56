mod common;

use lifts_core::cyclo::{Cyclotomic, Rational};
use lifts_core::perm::{PermGroup, Permutation};
use proptest::prelude::*;

fn arb_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    let term = (prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12, 15, 20]), 0i64..60, -6i64..7, 1i64..4);
    prop::collection::vec(term, 0..5).prop_map(|ts| {
        ts.into_iter().map(|(n, k, a, b)| Cyclotomic::root_of_unity(n, k).scale(&Rational::new(a.into(), b.into()))).sum()
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn near(a: num_complex::Complex64, b: num_complex::Complex64) -> bool {
    (a - b).norm() < 1e-8 * (1.0 + a.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in arb_cyclotomic(), b in arb_cyclotomic(), c in arb_cyclotomic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn galois_and_conjugation_are_ring_maps(a in arb_cyclotomic(), b in arb_cyclotomic(), t in prop::sample::select(vec![1i64, 7, 11, 13, 17, 19, 23, 29])) {
        prop_assert_eq!((&a * &b).galois(t), &a.galois(t) * &b.galois(t));
        prop_assert_eq!((&a + &b).galois(t), &a.galois(t) + &b.galois(t));
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert!(near((&a * &b).to_complex(), a.to_complex() * b.to_complex()));
        prop_assert!(near(a.conjugate().to_complex(), a.to_complex().conj()));
    }

    #[test]
    fn representation_is_canonical(a in arb_cyclotomic(), k in 0i64..12) {
        // same value built through a larger field
        let detour = &(&a * &Cyclotomic::root_of_unity(12, k)) * &Cyclotomic::root_of_unity(12, -k);
        prop_assert_eq!(detour.order(), a.order());
        prop_assert_eq!(&detour, &a);
        prop_assert!(a.order() % 4 != 2);
        let parsed: Cyclotomic = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn permutation_group_laws(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
        prop_assert_eq!(a.conjugate_by(&b).order(), a.order());
        prop_assert_eq!(Permutation::parse_cycles(&a.to_cycle_string(), 7).unwrap(), a.clone());
    }

    #[test]
    fn generated_groups(a in arb_perm(6), b in arb_perm(6)) {
        let g = PermGroup::generate(&[a, b], 5000).unwrap();
        let cd = g.classes();
        prop_assert_eq!(cd.sizes().iter().sum::<usize>(), g.order());
        prop_assert!(cd.sizes().iter().all(|s| g.order().is_multiple_of(*s)));
        prop_assert!(cd.rep(0).is_identity());
        let z = g.center();
        prop_assert!(z.is_normal_in(&g));
        prop_assert_eq!(z.order(), cd.sizes().iter().filter(|&&s| s == 1).count());
        for p in [2u64, 3, 5] {
            let s = g.sylow_subgroup(p);
            prop_assert_eq!(s.order(), lifts_core::perm::p_part(g.order(), p as usize));
            let k = g.o_p_prime(p);
            prop_assert!(k.is_normal_in(&g));
            prop_assert!(!(k.order() as u64).is_multiple_of(p));
        }
    }
}
