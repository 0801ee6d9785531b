//! Canonical labeling by pruned permutation search.
//!
//! Vertices are first split into cells by iterated degree refinement, an
//! isomorphism invariant; labels are handed out cell by cell. Among the
//! labelings that respect the cell order, the one whose relabeled edge set has
//! the greatest characteristic vector in colex order of r-subsets wins.
//! Colex order makes the bits of label `j` depend only on labels `0..=j`, so
//! every prefix of a labeling can be compared against the best prefix seen.
//! Candidates that are twins (their transposition is an automorphism) lead
//! to isomorphic subtrees and only one of them is explored.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{binomial, Edge, Hypergraph, Vertex};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 12;

/// Isomorphism-class key: equal iff the inputs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub r: usize,
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl CanonicalForm {
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_set(self.r, self.n, self.edges.iter().cloned().collect())
    }
}

pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm> {
    let perm = canonical_labeling(h)?;
    let relabeled = h.relabel_unchecked(&perm);
    Ok(CanonicalForm {
        r: relabeled.uniformity(),
        n: relabeled.vertex_count(),
        edges: relabeled.edges().to_vec(),
    })
}

/// `perm[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(h: &Hypergraph) -> Result<Vec<Vertex>> {
    let n = h.vertex_count();
    if n > CANON_MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count for canonical form",
            got: n,
            limit: CANON_MAX_VERTICES,
        });
    }
    let mut search = Search::new(h);
    search.run();
    let order = search
        .best_order
        .expect("at least one labeling is explored");
    let mut perm = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        perm[v] = label;
    }
    Ok(perm)
}

/// Iterated degree refinement; returns a color per vertex, colors ordered by
/// their (isomorphism-invariant) signatures.
fn refine(h: &Hypergraph) -> Vec<usize> {
    let n = h.vertex_count();
    let inc = h.incidence();
    let mut color: Vec<usize> = h.degrees();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|v| {
                let mut around: Vec<Vec<usize>> = inc[v]
                    .iter()
                    .map(|&ei| {
                        let mut c: Vec<usize> = h.edges()[ei]
                            .iter()
                            .filter(|&&u| u != v)
                            .map(|&u| color[u])
                            .collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                around.sort();
                (color[v], around)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<Vec<usize>>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let index: BTreeMap<&(usize, Vec<Vec<usize>>), usize> =
            distinct.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        // Reverse so higher-degree cells come first.
        let top = distinct.len();
        color = signatures.iter().map(|s| top - 1 - index[s]).collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    h: &'a Hypergraph,
    r: usize,
    /// Cell occupied by each label position.
    position_cell: Vec<usize>,
    color: Vec<usize>,
    twin_rep: Vec<Vertex>,
    inc: Vec<Vec<usize>>,
    best: Vec<Option<Vec<bool>>>,
    best_order: Option<Vec<Vertex>>,
}

impl<'a> Search<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let n = h.vertex_count();
        let color = refine(h);
        let mut cell_sizes = BTreeMap::new();
        for &c in &color {
            *cell_sizes.entry(c).or_insert(0usize) += 1;
        }
        let position_cell = cell_sizes
            .iter()
            .flat_map(|(&c, &size)| std::iter::repeat_n(c, size))
            .collect();
        Search {
            h,
            r: h.uniformity(),
            position_cell,
            twin_rep: twin_representatives(h, &color),
            color,
            inc: h.incidence(),
            best: vec![None; n],
            best_order: None,
        }
    }

    fn run(&mut self) {
        let n = self.h.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        self.descend(&mut label, &mut order, false);
    }

    /// Bits contributed by giving label `j` to `v`, in colex order of the
    /// other r-1 labels.
    fn block(&self, v: Vertex, j: usize, label: &[usize]) -> Vec<bool> {
        let width = binomial(j, self.r - 1) as usize;
        let mut bits = vec![false; width];
        for &ei in &self.inc[v] {
            let mut others: Vec<usize> = Vec::with_capacity(self.r - 1);
            let mut complete = true;
            for &u in &self.h.edges()[ei] {
                if u == v {
                    continue;
                }
                if label[u] == usize::MAX {
                    complete = false;
                    break;
                }
                others.push(label[u]);
            }
            if !complete {
                continue;
            }
            others.sort_unstable();
            let rank: u128 = others
                .iter()
                .enumerate()
                .map(|(i, &t)| binomial(t, i + 1))
                .sum();
            bits[rank as usize] = true;
        }
        bits
    }

    fn descend(&mut self, label: &mut Vec<usize>, order: &mut Vec<Vertex>, improved: bool) {
        let j = order.len();
        if j == self.h.vertex_count() {
            if improved || self.best_order.is_none() {
                self.best_order = Some(order.clone());
            }
            return;
        }
        let cell = self.position_cell[j];
        let mut tried_twin: Vec<Vertex> = Vec::new();
        for v in 0..self.h.vertex_count() {
            if label[v] != usize::MAX || self.color[v] != cell {
                continue;
            }
            let rep = self.twin_rep[v];
            if tried_twin.contains(&rep) {
                continue;
            }
            tried_twin.push(rep);

            label[v] = j;
            let bits = self.block(v, j, label);
            let step_improved = match &self.best[j] {
                None => true,
                Some(best) => match bits.cmp(best) {
                    std::cmp::Ordering::Less => {
                        label[v] = usize::MAX;
                        continue;
                    }
                    std::cmp::Ordering::Equal => false,
                    std::cmp::Ordering::Greater => true,
                },
            };
            if step_improved {
                self.best[j] = Some(bits);
                for deeper in &mut self.best[j + 1..] {
                    *deeper = None;
                }
            }
            order.push(v);
            self.descend(label, order, improved || step_improved);
            order.pop();
            label[v] = usize::MAX;
        }
    }
}

/// Smallest vertex of each twin class, where `u ~ v` iff swapping them is an
/// automorphism.
fn twin_representatives(h: &Hypergraph, color: &[usize]) -> Vec<Vertex> {
    let n = h.vertex_count();
    let mut rep: Vec<Vertex> = (0..n).collect();
    for v in 0..n {
        for u in 0..v {
            if rep[u] == u && color[u] == color[v] && swap_is_automorphism(h, u, v) {
                rep[v] = u;
                break;
            }
        }
    }
    rep
}

fn swap_is_automorphism(h: &Hypergraph, a: Vertex, b: Vertex) -> bool {
    h.edges().iter().all(|e| {
        if e.contains(&a) == e.contains(&b) {
            return true;
        }
        let mut img: Edge = e
            .iter()
            .map(|&x| {
                if x == a {
                    b
                } else if x == b {
                    a
                } else {
                    x
                }
            })
            .collect();
        img.sort_unstable();
        h.has_edge(&img)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    /// Lexicographically least sorted edge list over all permutations.
    fn brute_key(h: &Hypergraph) -> Vec<Edge> {
        (0..h.vertex_count())
            .permutations(h.vertex_count())
            .map(|p| h.relabel_unchecked(&p).edges().to_vec())
            .min()
            .unwrap()
    }

    #[test]
    fn complete_graph_form_is_all_triples() {
        let k34 = Hypergraph::complete(3, 4).unwrap();
        let form = canonical_form(&k34).unwrap();
        assert_eq!(form.edges, k34.edges());
    }

    #[test]
    fn relabeling_invariance() {
        let h = Hypergraph::simplex(3, 2).unwrap();
        let base = canonical_form(&h).unwrap();
        for p in (0..4).permutations(4) {
            assert_eq!(canonical_form(&h.relabel(&p).unwrap()).unwrap(), base);
        }
    }

    #[test]
    fn separates_all_three_graphs_on_five_vertices() {
        // 2^10 edge sets; canonical forms must partition them exactly like the
        // brute-force permutation minimum.
        let triples: Vec<Edge> = (0..5).combinations(3).collect();
        let mut by_canon = BTreeMap::new();
        let mut by_brute = BTreeMap::new();
        for mask in 0u32..(1 << triples.len()) {
            let edges: Vec<&Edge> = (0..triples.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &triples[i])
                .collect();
            let h = Hypergraph::new(3, 5, edges).unwrap();
            let c = canonical_form(&h).unwrap();
            let b = brute_key(&h);
            let from_c = by_canon
                .entry(c.clone())
                .or_insert_with(|| b.clone())
                .clone();
            let from_b = by_brute
                .entry(b.clone())
                .or_insert_with(|| c.clone())
                .clone();
            assert_eq!(from_c, b);
            assert_eq!(from_b, c);
        }
        assert_eq!(by_canon.len(), by_brute.len());
    }

    #[test]
    fn capacity_cap() {
        let h = Hypergraph::empty(3, 13).unwrap();
        assert!(matches!(canonical_form(&h), Err(Error::Capacity { .. })));
        assert!(canonical_form(&Hypergraph::empty(3, 12).unwrap()).is_ok());
        assert!(canonical_form(&Hypergraph::complete(3, 12).unwrap()).is_ok());
    }
}
