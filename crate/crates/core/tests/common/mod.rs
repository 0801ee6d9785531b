#![allow(dead_code)]
//! Independent brute-force oracles and generators for the integration tests.
//! Nothing here calls the crate's search code.

use std::collections::{BTreeSet, HashMap};

use erogers::{Edge, Hypergraph, Vertex};
use itertools::Itertools;
use proptest::prelude::*;

pub fn k(r: usize, s: usize) -> Hypergraph {
    Hypergraph::complete(r, s).unwrap()
}

pub fn h(r: usize, t: usize) -> Hypergraph {
    Hypergraph::simplex(r, t).unwrap()
}

/// The 3-graph `abc, bcd, cde, dea`.
pub fn fig2() -> Hypergraph {
    Hypergraph::new(3, 5, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4]]).unwrap()
}

pub fn from_mask(r: usize, n: usize, mask: &[bool]) -> Hypergraph {
    let edges: Vec<Edge> = (0..n)
        .combinations(r)
        .zip(mask)
        .filter(|(_, &b)| b)
        .map(|(e, _)| e)
        .collect();
    Hypergraph::new(r, n, edges).unwrap()
}

/// Random r-graph with `n` in `lo..=hi`, each r-set an edge with probability `p`.
pub fn random_graph(r: usize, lo: usize, hi: usize, p: f64) -> impl Strategy<Value = Hypergraph> {
    (lo..=hi).prop_flat_map(move |n| {
        let slots = (0..n).combinations(r).count();
        prop::collection::vec(prop::bool::weighted(p), slots).prop_map(move |m| from_mask(r, n, &m))
    })
}

pub fn nonempty_graph(r: usize, lo: usize, hi: usize, p: f64) -> impl Strategy<Value = Hypergraph> {
    random_graph(r, lo, hi, p).prop_filter("needs an edge", |g| !g.is_edgeless())
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn maps_edges(pattern: &Hypergraph, host: &Hypergraph, map: &[Vertex]) -> bool {
    let hosts: BTreeSet<&Edge> = host.edges().iter().collect();
    pattern.edges().iter().all(|e| {
        let mut img: Vec<Vertex> = e.iter().map(|&x| map[x]).collect();
        img.sort();
        img.windows(2).all(|w| w[0] < w[1]) && hosts.contains(&img)
    })
}

/// Number of injective edge-preserving maps, by listing all of them.
pub fn brute_embeddings(pattern: &Hypergraph, host: &Hypergraph) -> usize {
    (0..host.vertex_count())
        .permutations(pattern.vertex_count())
        .filter(|m| maps_edges(pattern, host, m))
        .count()
}

pub fn brute_homomorphic(g: &Hypergraph, f: &Hypergraph) -> bool {
    (0..g.vertex_count())
        .map(|_| 0..f.vertex_count())
        .multi_cartesian_product()
        .any(|m| maps_edges(g, f, &m))
        || (g.vertex_count() == 0)
}

/// Least relabeled edge list over all vertex permutations.
pub fn brute_canonical(g: &Hypergraph) -> Vec<Edge> {
    (0..g.vertex_count())
        .permutations(g.vertex_count())
        .map(|p| {
            let mut es: Vec<Edge> = g
                .edges()
                .iter()
                .map(|e| {
                    let mut x: Vec<Vertex> = e.iter().map(|&v| p[v]).collect();
                    x.sort();
                    x
                })
                .collect();
            es.sort();
            es
        })
        .min()
        .unwrap_or_default()
}

/// Edge-level k-shadow homomorphism search: every edge of G picks a
/// bijection onto an edge of F, and any two edges sharing a k-set must
/// restrict to the same map on it.
pub fn brute_shadow_hom(g: &Hypergraph, f: &Hypergraph, k: usize) -> bool {
    let r = g.uniformity();
    let options: Vec<Vec<Vertex>> = f
        .edges()
        .iter()
        .flat_map(|e| e.iter().copied().permutations(r))
        .collect();
    let mut chosen: Vec<usize> = Vec::new();
    fn consistent(g: &Hypergraph, options: &[Vec<Vertex>], chosen: &[usize], k: usize) -> bool {
        let i = chosen.len() - 1;
        let e = &g.edges()[i];
        let img = &options[chosen[i]];
        let map_i: HashMap<Vertex, Vertex> = e.iter().copied().zip(img.iter().copied()).collect();
        (0..i).all(|j| {
            let d = &g.edges()[j];
            let shared: Vec<Vertex> = d.iter().copied().filter(|v| e.contains(v)).collect();
            if shared.len() < k {
                return true;
            }
            let map_j: HashMap<Vertex, Vertex> = d
                .iter()
                .copied()
                .zip(options[chosen[j]].iter().copied())
                .collect();
            // Agreement on every k-subset of the overlap is agreement on the overlap.
            shared.iter().all(|v| map_i[v] == map_j[v])
        })
    }
    fn go(g: &Hypergraph, options: &[Vec<Vertex>], chosen: &mut Vec<usize>, k: usize) -> bool {
        if chosen.len() == g.edge_count() {
            return true;
        }
        for o in 0..options.len() {
            chosen.push(o);
            if consistent(g, options, chosen, k) && go(g, options, chosen, k) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(g, &options, &mut chosen, k)
}

/// Exact fraction compared by cross-multiplication.
#[derive(Clone, Copy, Debug)]
pub struct Frac(pub i64, pub i64);

impl PartialEq for Frac {
    fn eq(&self, o: &Self) -> bool {
        self.0 * o.1 == o.0 * self.1
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        (self.0 * o.1).partial_cmp(&(o.0 * self.1))
    }
}

/// max over nonempty edge subsets F' of the 2-shadow of
/// (e(F') + offset) / (v(F') - 1), v(F') counting covered vertices only.
pub fn brute_density(f: &Hypergraph, offset: i64) -> Frac {
    let pairs: Vec<Edge> = f
        .edges()
        .iter()
        .flat_map(|e| e.iter().copied().combinations(2))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let m = pairs.len();
    assert!(m <= 20);
    (1u32..1 << m)
        .map(|mask| {
            let chosen: Vec<&Edge> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &pairs[i])
                .collect();
            let verts: BTreeSet<Vertex> = chosen.iter().flat_map(|e| e.iter().copied()).collect();
            Frac(chosen.len() as i64 + offset, verts.len() as i64 - 1)
        })
        .fold(Frac(0, 1), |a, b| if b > a { b } else { a })
}

/// Does `set` (mask) induce a copy of F in H, by exhaustive map listing.
pub fn brute_induces_copy(h: &Hypergraph, f: &Hypergraph, set: &[Vertex]) -> bool {
    let sub = h.induced(set).unwrap();
    brute_embeddings(f, &sub) > 0
}

/// Number of isomorphism classes among all r-graphs on `n` vertices that
/// satisfy `keep`, via orbits of the full symmetric group.
pub fn brute_class_count(n: usize, r: usize, keep: impl Fn(&Hypergraph) -> bool) -> usize {
    let slots = (0..n).combinations(r).count();
    let mut classes = BTreeSet::new();
    for mask in 0u64..1 << slots {
        let bits: Vec<bool> = (0..slots).map(|i| mask >> i & 1 == 1).collect();
        let g = from_mask(r, n, &bits);
        if keep(&g) {
            classes.insert(brute_canonical(&g));
        }
    }
    classes.len()
}
