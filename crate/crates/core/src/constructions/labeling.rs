//! Random k-set labeling glued along edges.
//!
//! Every k-subset `S` of `[n]` draws a target `f(S)` uniformly from the
//! k-shadow of F and a uniform bijection `g_S: S -> f(S)`. An r-set `X` is an
//! edge when the maps `g_S` (`S ⊆ X`) agree on shared vertices, the glued map
//! is injective and its image is an edge of F. Any copy of G in the result
//! glues into a k-shadow homomorphism G -> F.

use std::collections::HashSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rng::{StreamKind, Substream};
use super::{lex_rank, ConstructionParams};
use crate::error::{Error, Result};
use crate::hypercore::{binomial, Edge, Hypergraph, Vertex};

/// Upper bound on the number of k-subsets labeled in one construction.
pub const MAX_LABELS: u128 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    #[serde(rename = "S")]
    pub set: Vec<Vertex>,
    #[serde(rename = "f_S")]
    pub target: Vec<Vertex>,
    /// `g_S(set[i]) = image[i]`.
    #[serde(rename = "g_S")]
    pub image: Vec<Vertex>,
}

/// Certificate of [`construct_shadow_labeling`]; labels in lexicographic
/// order of `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowLabeling {
    pub k: usize,
    pub labels: Vec<Label>,
}

impl ShadowLabeling {
    pub fn vertex_count(&self) -> usize {
        self.labels
            .last()
            .and_then(|l| l.set.last())
            .map_or(0, |&v| v + 1)
    }

    pub fn label(&self, set: &[Vertex]) -> &Label {
        &self.labels[lex_rank(set, self.vertex_count()) as usize]
    }

    /// The glued map on `set`, when the labels of its k-subsets agree.
    pub fn glue(&self, set: &[Vertex]) -> Option<Vec<Vertex>> {
        let mut image = vec![usize::MAX; set.len()];
        for pos in (0..set.len()).combinations(self.k) {
            let sub: Vec<Vertex> = pos.iter().map(|&p| set[p]).collect();
            let label = self.label(&sub);
            for (&p, &v) in pos.iter().zip(&label.image) {
                if image[p] == usize::MAX {
                    image[p] = v;
                } else if image[p] != v {
                    return None;
                }
            }
        }
        Some(image)
    }

    /// Re-derives edge membership of `set` from the certificate.
    pub fn admits(&self, set: &[Vertex], f: &Hypergraph) -> bool {
        self.glue(set).is_some_and(|g| f.has_edge_unsorted(&g))
    }
}

pub fn construct_shadow_labeling(
    n: usize,
    f: &Hypergraph,
    k: usize,
    params: &ConstructionParams,
) -> Result<(Hypergraph, ShadowLabeling)> {
    params.validate()?;
    let r = f.uniformity();
    if k < 2 || k >= r {
        return Err(Error::invalid(format!(
            "shadow labeling needs 2 <= k < r, got k = {k}, r = {r}"
        )));
    }
    if f.is_edgeless() {
        return Err(Error::invalid("F must have at least one edge"));
    }
    if n < f.vertex_count() {
        return Err(Error::invalid(format!(
            "n = {n} is smaller than v(F) = {}",
            f.vertex_count()
        )));
    }
    let count = binomial(n, k);
    if count > MAX_LABELS {
        return Err(Error::Capacity {
            what: "number of k-subsets to label",
            got: count.min(usize::MAX as u128) as usize,
            limit: MAX_LABELS as usize,
        });
    }
    let targets = f.shadow(k)?.edges().to_vec();
    let sets: Vec<Vec<Vertex>> = (0..n).combinations(k).collect();
    let seed = params.seed;
    let labels: Vec<Label> = sets
        .into_par_iter()
        .enumerate()
        .map(|(i, set)| {
            let mut s = Substream::new(seed, StreamKind::ShadowLabel, i as u64);
            let target = targets[s.below(targets.len() as u64) as usize].clone();
            let mut image = target.clone();
            s.shuffle(&mut image);
            Label { set, target, image }
        })
        .collect();
    let labeling = ShadowLabeling { k, labels };

    let prefixes: HashSet<Vec<Vertex>> = f
        .edges()
        .iter()
        .flat_map(|e| (1..r).flat_map(move |size| e.iter().copied().combinations(size)))
        .collect();
    let edges: Vec<Vec<Edge>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut state = Growth {
                labeling: &labeling,
                f,
                prefixes: &prefixes,
                n,
                r,
                chosen: vec![first],
                image: vec![usize::MAX],
            };
            state.grow(&mut out);
            out
        })
        .collect();
    let h = Hypergraph::new(r, n, edges.into_iter().flatten())?;
    Ok((h, labeling))
}

struct Growth<'a> {
    labeling: &'a ShadowLabeling,
    f: &'a Hypergraph,
    /// Sorted proper sub-multisets of F edges; partial images must be one.
    prefixes: &'a HashSet<Vec<Vertex>>,
    n: usize,
    r: usize,
    chosen: Vec<Vertex>,
    /// Glued image of each chosen vertex; `usize::MAX` until some k-set fixes it.
    image: Vec<Vertex>,
}

impl Growth<'_> {
    fn grow(&mut self, out: &mut Vec<Edge>) {
        if self.chosen.len() == self.r {
            if self.f.has_edge_unsorted(&self.image) {
                out.push(self.chosen.clone());
            }
            return;
        }
        let last = *self.chosen.last().expect("nonempty");
        for x in last + 1..self.n {
            let saved = self.image.clone();
            self.chosen.push(x);
            self.image.push(usize::MAX);
            if self.absorb_new_vertex() {
                self.grow(out);
            }
            self.chosen.pop();
            self.image = saved;
        }
    }

    /// Applies every k-set containing the newest vertex; false on conflict.
    fn absorb_new_vertex(&mut self) -> bool {
        let k = self.labeling.k;
        let m = self.chosen.len();
        if m < k {
            return true;
        }
        for others in (0..m - 1).combinations(k - 1) {
            let mut pos = others;
            pos.push(m - 1);
            let sub: Vec<Vertex> = pos.iter().map(|&p| self.chosen[p]).collect();
            let label = self.labeling.label(&sub);
            for (&p, &v) in pos.iter().zip(&label.image) {
                if self.image[p] == usize::MAX {
                    self.image[p] = v;
                } else if self.image[p] != v {
                    return false;
                }
            }
        }
        // Every chosen vertex now lies in some k-set, so the image is total.
        let mut partial = self.image.clone();
        partial.sort_unstable();
        if partial.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        m == self.r || self.prefixes.contains(&partial)
    }
}
