mod common;

use common::*;
use erogers::exact::{
    enumerate_g_free, f_exact, max_f_free_bruteforce, max_f_free_subset, max_f_free_subset_with,
    MaxFreeOptions,
};
use erogers::{contains_copy, Hypergraph};
use itertools::Itertools;
use proptest::prelude::*;

fn k4_free(g: &Hypergraph) -> bool {
    (0..g.vertex_count())
        .combinations(4)
        .all(|q| !q.iter().copied().combinations(3).all(|t| g.has_edge(&t)))
}

/// min over all K^3_4-free 3-graphs on n vertices of the largest edge-free
/// vertex set, by listing every graph and every subset.
fn brute_f_k33_k34(n: usize) -> usize {
    let slots = (0..n).combinations(3).count();
    (0u64..1 << slots)
        .map(|m| {
            from_mask(
                3,
                n,
                &(0..slots).map(|i| m >> i & 1 == 1).collect::<Vec<_>>(),
            )
        })
        .filter(k4_free)
        .map(|g| {
            (0u32..1 << n)
                .filter(|s| {
                    let set: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
                    set.iter().copied().combinations(3).all(|t| !g.has_edge(&t))
                })
                .map(u32::count_ones)
                .max()
                .unwrap() as usize
        })
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn branch_and_bound_matches_bruteforce(g in random_graph(3, 4, 10, 0.35), use_k4 in any::<bool>()) {
        let f = if use_k4 { k(3, 4) } else { k(3, 3) };
        let bb = max_f_free_subset(&g, &f).unwrap();
        prop_assert_eq!(bb.size, max_f_free_bruteforce(&g, &f).unwrap());
        prop_assert_eq!(bb.witness.len(), bb.size);
        prop_assert!(!brute_induces_copy(&g, &f, &bb.witness));
        let packed = max_f_free_subset_with(&g, &f, MaxFreeOptions { packing_bound: true, ..Default::default() }).unwrap();
        prop_assert_eq!(packed, bb);
    }

    #[test]
    fn witness_is_lexicographically_least(g in random_graph(3, 4, 8, 0.4)) {
        let f = k(3, 3);
        let bb = max_f_free_subset(&g, &f).unwrap();
        let least = (0..g.vertex_count())
            .combinations(bb.size)
            .find(|s| !brute_induces_copy(&g, &f, s))
            .unwrap();
        prop_assert_eq!(bb.witness, least);
    }
}

#[test]
fn class_counts_match_permutation_quotient() {
    for n in 3..=5 {
        let got = enumerate_g_free(n, 3, &k(3, 4)).unwrap().count();
        assert_eq!(got, brute_class_count(n, 3, k4_free), "n = {n}");
    }
    // All 3-graphs on 5 vertices: G = K^3_6 never fits.
    assert_eq!(
        enumerate_g_free(5, 3, &k(3, 6)).unwrap().count(),
        brute_class_count(5, 3, |_| true)
    );
    assert_eq!(brute_class_count(4, 3, |_| true), 5);
}

#[test]
fn enumeration_yields_g_free_representatives_once() {
    let all: Vec<Hypergraph> = enumerate_g_free(5, 3, &fig2()).unwrap().collect();
    assert!(all
        .iter()
        .all(|g| contains_copy(g, &fig2()).unwrap().is_none()));
    let forms: std::collections::BTreeSet<_> = all.iter().map(brute_canonical).collect();
    assert_eq!(forms.len(), all.len());
    let again: Vec<Hypergraph> = enumerate_g_free(5, 3, &fig2()).unwrap().collect();
    assert_eq!(all, again);
}

#[test]
fn f_exact_matches_full_bruteforce() {
    assert_eq!(f_exact(&k(3, 3), &k(3, 4), 4).unwrap().value, 3);
    for n in 4..=5 {
        assert_eq!(
            f_exact(&k(3, 3), &k(3, 4), n).unwrap().value,
            brute_f_k33_k34(n),
            "n = {n}"
        );
    }
}

/// Largest vertex set of `0..n` spanning no edge, over all subsets.
fn brute_edge_free(n: usize, edges: &[Vec<usize>]) -> usize {
    (0u32..1 << n)
        .filter(|s| edges.iter().all(|e| !e.iter().all(|v| s >> v & 1 == 1)))
        .map(u32::count_ones)
        .max()
        .unwrap() as usize
}

#[test]
fn f_exact_with_two_disjoint_edges_forbidden() {
    // Being free of two disjoint edges means every two edges intersect, so
    // a DFS over intersecting families lists the whole domain.
    fn go(
        n: usize,
        slots: &[Vec<usize>],
        i: usize,
        chosen: &mut Vec<Vec<usize>>,
        best: &mut usize,
    ) {
        if i == slots.len() {
            *best = (*best).min(brute_edge_free(n, chosen));
            return;
        }
        go(n, slots, i + 1, chosen, best);
        if chosen
            .iter()
            .all(|c| c.iter().any(|v| slots[i].contains(v)))
        {
            chosen.push(slots[i].clone());
            go(n, slots, i + 1, chosen, best);
            chosen.pop();
        }
    }
    let g = Hypergraph::new(3, 6, [[0, 1, 2], [3, 4, 5]]).unwrap();
    for n in 4..=6 {
        let slots: Vec<Vec<usize>> = (0..n).combinations(3).collect();
        let mut brute = n;
        go(n, &slots, 0, &mut Vec::new(), &mut brute);
        assert_eq!(f_exact(&k(3, 3), &g, n).unwrap().value, brute, "n = {n}");
    }
}

#[test]
fn f_exact_is_monotone_and_positive() {
    let g = k(3, 4);
    let f = k(3, 3);
    let vals: Vec<usize> = (1..=6).map(|n| f_exact(&f, &g, n).unwrap().value).collect();
    assert!(vals.windows(2).all(|w| w[0] <= w[1]), "{vals:?}");
    assert!(vals.iter().all(|&v| v >= 1));
    assert!(vals.iter().zip(1..).all(|(&v, n)| v <= n));
}
