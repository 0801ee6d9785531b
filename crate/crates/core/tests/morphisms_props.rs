mod common;

use common::*;
use erogers::morphisms::{
    audit_shadow_hom, find_homomorphism, find_shadow_homomorphism, is_k_tightly_connected,
    is_sub_iterated_blowup, verify_shadow_hom,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn one_shadow_is_homomorphism(g in random_graph(3, 4, 6, 0.3), f in nonempty_graph(3, 3, 5, 0.5)) {
        let shadow = find_shadow_homomorphism(&g, &f, 1).unwrap().is_some();
        let hom = find_homomorphism(&g, &f).unwrap();
        prop_assert_eq!(shadow, hom.is_some());
        if let Some(w) = hom {
            prop_assert!(w.is_valid(&g, &f));
        }
    }

    #[test]
    fn homomorphism_matches_exhaustive_maps(g in random_graph(3, 3, 5, 0.4), f in nonempty_graph(3, 3, 4, 0.5)) {
        prop_assert_eq!(find_homomorphism(&g, &f).unwrap().is_some(), brute_homomorphic(&g, &f));
    }

    #[test]
    fn larger_k_is_more_permissive(g in random_graph(4, 5, 6, 0.25), f in nonempty_graph(4, 4, 5, 0.5)) {
        let mut seen_yes = false;
        for k in 1..4 {
            let yes = find_shadow_homomorphism(&g, &f, k).unwrap().is_some();
            prop_assert!(!seen_yes || yes, "k = {} lost a decision", k);
            seen_yes |= yes;
        }
    }

    #[test]
    fn shadow_hom_matches_edge_level_search(g in random_graph(3, 4, 5, 0.35), f in nonempty_graph(3, 3, 4, 0.6)) {
        prop_assume!(g.edge_count() <= 5);
        for k in 1..3 {
            let found = find_shadow_homomorphism(&g, &f, k).unwrap();
            prop_assert_eq!(found.is_some(), brute_shadow_hom(&g, &f, k));
            if let Some(w) = found {
                prop_assert_eq!(audit_shadow_hom(&g, &f, k, &w).unwrap(), vec![]);
            }
        }
    }

    #[test]
    fn tight_orders_are_valid(g in random_graph(3, 4, 7, 0.4), k in 1usize..=3) {
        if let Some(order) = is_k_tightly_connected(&g, k).unwrap() {
            prop_assert!(order.is_valid(&g));
        }
    }

    // A 2-tightly connected G that is not homomorphic to F cannot sit in an
    // F-iterated blowup: the blowup folds back onto F.
    #[test]
    fn tight_and_not_homomorphic_is_not_in_blowups(g in nonempty_graph(3, 4, 5, 0.6), f in nonempty_graph(3, 3, 4, 0.7)) {
        prop_assume!(is_k_tightly_connected(&g, 2).unwrap().is_some());
        prop_assume!(find_homomorphism(&g, &f).unwrap().is_none());
        prop_assert!(is_sub_iterated_blowup(&g, &f, 2).unwrap().is_none());
    }

    #[test]
    fn blowup_certificates_replay(f in nonempty_graph(3, 3, 4, 0.7), v in 0usize..3) {
        let g = f.blowup_with(v, &f).unwrap();
        let cert = is_sub_iterated_blowup(&g, &f, 1).unwrap().expect("one step suffices");
        prop_assert!(cert.is_valid(&g, &f));
    }
}

#[test]
fn figure_two_witness_verifies() {
    let w = find_shadow_homomorphism(&fig2(), &k(3, 3), 2)
        .unwrap()
        .unwrap();
    assert!(verify_shadow_hom(&fig2(), &k(3, 3), 2, &w).unwrap());
    assert!(find_homomorphism(&fig2(), &k(3, 3)).unwrap().is_none());
    assert!(brute_shadow_hom(&fig2(), &k(3, 3), 2));
    assert!(!brute_shadow_hom(&fig2(), &k(3, 3), 1));
}

#[test]
fn clique_and_simplex_negatives_agree_with_oracle() {
    for (g, f) in [(k(3, 4), k(3, 3)), (h(3, 3), h(3, 2)), (h(3, 4), h(3, 3))] {
        assert!(find_shadow_homomorphism(&g, &f, 2).unwrap().is_none());
        assert!(!brute_shadow_hom(&g, &f, 2));
    }
}
