use maximin_core::duality::{dual_forward, dual_forward_fast, dual_forward_relation, roundtrip_check};
use maximin_core::io::{lattice_to_json, parse_lattice, parse_representation, representation_to_json};
use maximin_core::lattice::check_hom;
use maximin_core::preference::{check_axioms, zero_class};
use maximin_core::representation::{derive_pref_fast, derived_relation, synthesize, CongruenceKind};
use maximin_core::spectrum::join_irreducibles;
use maximin_core::testkit::{
    random_axiomatic_order, random_distributive_lattice, random_poset, random_representation,
    random_weak_order, Seed,
};
use maximin_core::{
    congruence_beta_dprime, congruence_beta_prime, downset_lattice, quotient, validate_laws,
    verify_representation, SpectralSpace, WeakOrder,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn downset_lattices_satisfy_every_law(size in 0usize..=5, seed: u64) {
        let poset = random_poset(size, Seed(seed));
        let l = downset_lattice(&poset).unwrap();
        prop_assert!(validate_laws(&l.tables()).unwrap().is_empty());
        // Birkhoff: join-irreducibles of O(P) correspond to the points of P
        prop_assert_eq!(join_irreducibles(&l).len(), size);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sigma_is_a_bounded_homomorphism(seed: u64) {
        let l = random_distributive_lattice(5, Seed(seed));
        let s = SpectralSpace::new(&l);
        prop_assert!(s.sigma(l.bottom()).is_empty());
        prop_assert_eq!(s.sigma(l.top()), s.all_points());
        for a in l.elements() {
            for b in l.elements() {
                prop_assert_eq!(s.sigma(l.meet(a, b)), s.sigma(a).intersection(s.sigma(b)));
                prop_assert_eq!(s.sigma(l.join(a, b)), s.sigma(a).union(s.sigma(b)));
            }
        }
    }

    #[test]
    fn forward_dual_fast_path_and_totality(seed: u64) {
        let l = random_distributive_lattice(5, Seed(seed));
        let s = SpectralSpace::new(&l);
        let w = random_weak_order(l.len(), Seed(seed).derive(1));
        let lit = dual_forward_relation(&s, &w);
        prop_assert!(lit.is_total_preorder());
        prop_assert_eq!(lit.to_weak_order().unwrap(), dual_forward_fast(&s, &w).into_inner());
        prop_assert_eq!(dual_forward(&s, &w), dual_forward_fast(&s, &w));
    }

    #[test]
    fn derived_fast_path_matches_literal(seed: u64) {
        let l = random_distributive_lattice(5, Seed(seed));
        let rep = random_representation(&l, Seed(seed).derive(1));
        prop_assert!(rep.is_homomorphic(&l));
        let lit = derived_relation(&rep);
        let fast = derive_pref_fast(&rep);
        for a in l.elements() {
            for b in l.elements() {
                prop_assert_eq!(lit.holds(a, b), fast.prefers(a, b));
            }
        }
    }

    #[test]
    fn axiomatic_orders_round_trip_and_represent(seed: u64) {
        let l = random_distributive_lattice(5, Seed(seed));
        let w = random_axiomatic_order(&l, Seed(seed).derive(1));
        prop_assert!(roundtrip_check(&l, &w).agreement);
        let s = synthesize(&l, &w).unwrap();
        prop_assert!(verify_representation(&l, &w, &s.representation).holds);
        prop_assert!(check_hom(&s.projection));
        prop_assert_eq!(s.congruence.class(l.bottom()), s.zero_class.members);
        if s.kind == CongruenceKind::BetaDoublePrime {
            prop_assert!(check_axioms(&l, &w).all_hold());
        }
    }

    #[test]
    fn ideal_congruences_nest_and_quotient(seed: u64, pick: usize) {
        let l = random_distributive_lattice(5, Seed(seed));
        let ideal = l.down_set(pick % l.len());
        let fine = congruence_beta_prime(&l, ideal).unwrap();
        let coarse = congruence_beta_dprime(&l, ideal).unwrap();
        prop_assert!(fine.refines(&coarse));
        for c in [&fine, &coarse] {
            let (q, h) = quotient(&l, c).unwrap();
            prop_assert!(h.check() && h.is_surjective());
            prop_assert_eq!(&h.kernel(), c);
            prop_assert!(validate_laws(&q.tables()).unwrap().is_empty());
        }
    }

    #[test]
    fn arbitrary_orders_agree_with_axioms_off_bottom(seed: u64) {
        let l = random_distributive_lattice(4, Seed(seed));
        let w = random_weak_order(l.len(), Seed(seed).derive(1));
        let c = maximin_core::duality::duality_conditions(&SpectralSpace::new(&l), &w);
        prop_assert!(c.consistent(), "{:?}", c);
    }

    #[test]
    fn json_round_trips(seed: u64) {
        let l = random_distributive_lattice(4, Seed(seed));
        prop_assert_eq!(&parse_lattice(&lattice_to_json(&l).to_string()).unwrap(), &l);
        let rep = random_representation(&l, Seed(seed).derive(1));
        let back = parse_representation(&representation_to_json(&rep).to_string(), &l).unwrap();
        prop_assert_eq!(back, rep);
    }
}

#[test]
fn zero_class_of_constant_order_is_everything() {
    let l = random_distributive_lattice(4, Seed(9));
    let z = zero_class(&l, &WeakOrder::constant(l.len())).unwrap();
    assert_eq!(z.members, l.all());
    assert!(!z.proper);
}
