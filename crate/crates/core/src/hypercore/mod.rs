//! r-uniform hypergraphs on contiguous vertex ids.
//!
//! A [`Hypergraph`] is immutable once built: every edge is a strictly
//! increasing tuple of `r` vertex ids below `n`, and the edge list is kept in
//! lexicographic order so membership is a binary search.

mod canon;
mod embed;
mod format;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, CANON_MAX_VERTICES};
pub use embed::{contains_copy, count_embeddings, EmbeddingCount, MapSearch};
pub use format::{parse_hg, parse_hg_stream, write_hg, write_hg_stream};

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = Vec<Vertex>;

/// An r-uniform hypergraph on the vertex set `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<Vertex>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::new(raw.r, raw.n, raw.edges)
    }
}

/// An injective map from the vertices of a pattern into a host; `map[x]` is
/// the host image of pattern vertex `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<Vertex>,
}

impl Embedding {
    pub fn image(&self, x: Vertex) -> Vertex {
        self.map[x]
    }

    /// True iff the map is injective, in range and sends every edge of
    /// `pattern` to an edge of `host`.
    pub fn is_valid(&self, pattern: &Hypergraph, host: &Hypergraph) -> bool {
        if self.map.len() != pattern.n || pattern.r != host.r {
            return false;
        }
        if self.map.iter().any(|&u| u >= host.n) {
            return false;
        }
        let distinct: BTreeSet<_> = self.map.iter().collect();
        if distinct.len() != self.map.len() {
            return false;
        }
        pattern
            .edges
            .iter()
            .all(|e| host.has_edge_unsorted(&e.iter().map(|&x| self.map[x]).collect::<Vec<_>>()))
    }
}

impl Hypergraph {
    /// Builds an r-graph, sorting each edge and the edge list.
    ///
    /// Rejects `r = 0`, edges of the wrong size, repeated vertices inside an
    /// edge, out-of-range vertices and duplicate edges.
    pub fn new<E, I>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        E: AsRef<[Vertex]>,
        I: IntoIterator<Item = E>,
    {
        if r == 0 {
            return Err(Error::invalid("uniformity must be at least 1"));
        }
        let mut set = BTreeSet::new();
        for e in edges {
            let e = e.as_ref();
            let edge = check_edge(r, n, e)?;
            if !set.insert(edge) {
                return Err(Error::invalid(format!("duplicate edge {e:?}")));
            }
        }
        Ok(Self::from_set(r, n, set))
    }

    /// Edgeless r-graph on `n` vertices.
    pub fn empty(r: usize, n: usize) -> Result<Self> {
        Self::new(r, n, std::iter::empty::<Edge>())
    }

    pub(crate) fn from_set(r: usize, n: usize, edges: BTreeSet<Edge>) -> Self {
        Hypergraph {
            r,
            n,
            edges: edges.into_iter().collect(),
        }
    }

    /// `K^r_s`: every r-subset of `0..s`.
    pub fn complete(r: usize, s: usize) -> Result<Self> {
        if r == 0 || r > s {
            return Err(Error::invalid(format!(
                "complete graph needs 1 <= r <= s, got r = {r}, s = {s}"
            )));
        }
        let edges = (0..s).combinations(r).collect();
        Ok(Self::from_set(r, s, edges))
    }

    /// `H^r_t`, the r-graph on `r + 1` vertices with `t` edges.
    ///
    /// The representative drops vertex `r`, then `r - 1`, and so on: edge `j`
    /// is `0..=r` minus vertex `r - j`.
    pub fn simplex(r: usize, t: usize) -> Result<Self> {
        if r == 0 || t == 0 || t > r + 1 {
            return Err(Error::invalid(format!(
                "H^r_t needs r >= 1 and 1 <= t <= r + 1, got r = {r}, t = {t}"
            )));
        }
        let edges = (0..t)
            .map(|j| {
                let missing = r - j;
                (0..=r).filter(|&x| x != missing).collect()
            })
            .collect();
        Ok(Self::from_set(r, r + 1, edges))
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    /// `edge` must be sorted.
    pub fn has_edge(&self, edge: &[Vertex]) -> bool {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(edge))
            .is_ok()
    }

    /// Same as [`Hypergraph::has_edge`] but sorts its input first.
    pub fn has_edge_unsorted(&self, edge: &[Vertex]) -> bool {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.has_edge(&e)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Edge indices incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for {} vertices",
                self.n
            )));
        }
        Ok(())
    }

    /// The k-shadow: all k-subsets of edges, on the same vertex set.
    pub fn shadow(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.r {
            return Err(Error::invalid(format!(
                "shadow order k = {k} must satisfy 1 <= k <= r = {}",
                self.r
            )));
        }
        let set = self
            .edges
            .iter()
            .flat_map(|e| e.iter().copied().combinations(k))
            .collect();
        Ok(Self::from_set(k, self.n, set))
    }

    /// Induced subgraph on `vertices`, relabeled in increasing order of the
    /// original ids.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Self> {
        let mut keep: Vec<Vertex> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            relabel[v] = i;
        }
        let set = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| relabel[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| relabel[v]).collect())
            .collect();
        Ok(Self::from_set(self.r, keep.len(), set))
    }

    /// Deletes `v` and its edges; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Self> {
        self.check_vertex(v)?;
        let rest: Vec<Vertex> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&rest)
    }

    /// Renames vertex `x` to `perm[x]`; `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::invalid(
                "permutation length differs from vertex count",
            ));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::invalid("relabeling is not a permutation"));
            }
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[Vertex]) -> Self {
        let set = self
            .edges
            .iter()
            .map(|e| {
                let mut img: Edge = e.iter().map(|&x| perm[x]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        Self::from_set(self.r, self.n, set)
    }

    /// `H(v, t)`: adds `t - 1` copies of `v` with ids `n, n + 1, ...`.
    ///
    /// Each copy inherits every edge through `v`; no edge contains two
    /// members of `{v} ∪ copies`.
    pub fn blowup(&self, v: Vertex, t: usize) -> Result<Self> {
        self.check_vertex(v)?;
        if t == 0 {
            return Err(Error::invalid("blowup multiplicity must be at least 1"));
        }
        let mut set: BTreeSet<Edge> = self.edges.iter().cloned().collect();
        for e in self.edges.iter().filter(|e| e.contains(&v)) {
            for copy in self.n..self.n + t - 1 {
                let mut img: Edge = e.iter().map(|&x| if x == v { copy } else { x }).collect();
                img.sort_unstable();
                set.insert(img);
            }
        }
        Ok(Self::from_set(self.r, self.n + t - 1, set))
    }

    /// `H(v, F)`: `H(v, v(F))` plus a copy of `F` on `v` and its copies.
    ///
    /// `v` plays vertex 0 of `F`; the copy with id `n + i - 1` plays vertex
    /// `i`.
    pub fn blowup_with(&self, v: Vertex, pattern: &Hypergraph) -> Result<Self> {
        if pattern.r != self.r {
            return Err(Error::invalid(format!(
                "uniformity mismatch: host r = {}, pattern r = {}",
                self.r, pattern.r
            )));
        }
        if pattern.n == 0 {
            return Err(Error::invalid("cannot blow up by an empty pattern"));
        }
        let base = self.blowup(v, pattern.n)?;
        let role = |x: Vertex| if x == 0 { v } else { self.n + x - 1 };
        let mut set: BTreeSet<Edge> = base.edges.into_iter().collect();
        for e in &pattern.edges {
            let mut img: Edge = e.iter().map(|&x| role(x)).collect();
            img.sort_unstable();
            set.insert(img);
        }
        Ok(Self::from_set(self.r, base.n, set))
    }
}

fn check_edge(r: usize, n: usize, e: &[Vertex]) -> Result<Edge> {
    if e.len() != r {
        return Err(Error::invalid(format!(
            "edge {e:?} has {} vertices, expected {r}",
            e.len()
        )));
    }
    let mut edge = e.to_vec();
    edge.sort_unstable();
    if edge.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid(format!("edge {e:?} repeats a vertex")));
    }
    if let Some(&v) = edge.last() {
        if v >= n {
            return Err(Error::invalid(format!(
                "edge {e:?} uses vertex {v}, but there are only {n} vertices"
            )));
        }
    }
    Ok(edge)
}

pub fn require_same_uniformity(a: &Hypergraph, b: &Hypergraph) -> Result<()> {
    if a.r != b.r {
        return Err(Error::invalid(format!(
            "uniformity mismatch: {} vs {}",
            a.r, b.r
        )));
    }
    Ok(())
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(r: usize, n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(r, n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn complete_counts() {
        assert_eq!(
            Hypergraph::complete(3, 3).unwrap().edges(),
            &[vec![0, 1, 2]]
        );
        assert_eq!(Hypergraph::complete(3, 4).unwrap().edge_count(), 4);
        assert_eq!(Hypergraph::complete(2, 5).unwrap().edge_count(), 10);
        assert!(Hypergraph::complete(4, 3).is_err());
        assert!(Hypergraph::complete(0, 3).is_err());
    }

    #[test]
    fn simplex_representatives() {
        let h32 = Hypergraph::simplex(3, 2).unwrap();
        assert_eq!(h32, hg(3, 4, &[&[0, 1, 2], &[0, 1, 3]]));
        assert_eq!(
            Hypergraph::simplex(3, 4).unwrap(),
            Hypergraph::complete(3, 4).unwrap()
        );
        let h41 = Hypergraph::simplex(4, 1).unwrap();
        assert_eq!(h41.vertex_count(), 5);
        assert_eq!(h41.edges(), &[vec![0, 1, 2, 3]]);
        assert!(Hypergraph::simplex(3, 0).is_err());
        assert!(Hypergraph::simplex(3, 5).is_err());
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Hypergraph::new(3, 4, [[0, 1, 1]]).is_err());
        assert!(Hypergraph::new(3, 4, [[0, 1, 4]]).is_err());
        assert!(Hypergraph::new(3, 4, [vec![0, 1]]).is_err());
        assert!(Hypergraph::new(3, 4, [[0, 1, 2], [2, 1, 0]]).is_err());
        assert!(Hypergraph::new(0, 4, Vec::<Edge>::new()).is_err());
    }

    #[test]
    fn shadows() {
        let k33 = Hypergraph::complete(3, 3).unwrap();
        assert_eq!(
            k33.shadow(2).unwrap(),
            hg(2, 3, &[&[0, 1], &[0, 2], &[1, 2]])
        );
        let h32 = Hypergraph::simplex(3, 2).unwrap();
        assert_eq!(
            h32.shadow(2).unwrap(),
            hg(2, 4, &[&[0, 1], &[0, 2], &[1, 2], &[0, 3], &[1, 3]])
        );
        assert_eq!(h32.shadow(3).unwrap(), h32);
        assert!(h32.shadow(0).is_err());
        assert!(h32.shadow(4).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let k34 = Hypergraph::complete(3, 4).unwrap();
        assert_eq!(
            k34.induced(&[0, 1, 2]).unwrap(),
            Hypergraph::complete(3, 3).unwrap()
        );
        assert_eq!(k34.induced(&[]).unwrap(), Hypergraph::empty(3, 0).unwrap());
        let h32 = Hypergraph::simplex(3, 2).unwrap();
        assert_eq!(h32.induced(&[0, 2, 3]).unwrap().edge_count(), 0);
        assert!(h32.induced(&[0, 9]).is_err());
        // order preserving relabel: {1,2,3} of H^3_2 keeps nothing, {0,1,3} keeps 013 -> 012
        assert_eq!(h32.induced(&[3, 0, 1]).unwrap().edges(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn blowup_single_copy() {
        let k33 = Hypergraph::complete(3, 3).unwrap();
        let b = k33.blowup(0, 2).unwrap();
        assert_eq!(b, hg(3, 4, &[&[0, 1, 2], &[1, 2, 3]]));
        assert_eq!(k33.blowup(1, 1).unwrap(), k33);
        assert!(k33.blowup(3, 2).is_err());
        assert!(k33.blowup(0, 0).is_err());
    }

    #[test]
    fn blowup_with_triple_matches_figure() {
        let k33 = Hypergraph::complete(3, 3).unwrap();
        let b = k33.blowup_with(0, &k33).unwrap();
        assert_eq!(b.vertex_count(), 5);
        assert_eq!(
            b,
            hg(3, 5, &[&[0, 1, 2], &[1, 2, 3], &[1, 2, 4], &[0, 3, 4]])
        );
        let k44 = Hypergraph::complete(4, 4).unwrap();
        assert!(k33.blowup_with(0, &k44).is_err());
    }

    #[test]
    fn blowup_with_places_pattern_on_copies() {
        let h = Hypergraph::simplex(3, 3).unwrap();
        let f = Hypergraph::simplex(3, 2).unwrap();
        let b = h.blowup_with(2, &f).unwrap();
        let cluster = [2, 4, 5, 6];
        let emb = Embedding {
            map: cluster.to_vec(),
        };
        assert!(emb.is_valid(&f, &b));
        assert!(contains_copy(&b.induced(&cluster).unwrap(), &f)
            .unwrap()
            .is_some());
    }

    #[test]
    fn remove_vertex_shifts() {
        let h32 = Hypergraph::simplex(3, 2).unwrap();
        let g = h32.remove_vertex(2).unwrap();
        assert_eq!(g, hg(3, 3, &[&[0, 1, 2]]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }
}
