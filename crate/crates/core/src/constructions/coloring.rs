//! Random pair coloring with per-color vertex maps into F.
//!
//! Pairs of `[n]` get one of `ell` colors; each color `t` carries a map
//! `gamma_t: [n] -> V(F)`. An r-set is an edge when all its pairs share a
//! color `t` and `gamma_t` maps it injectively onto an edge of F. A copy of a
//! 2-tightly connected G is then monochromatic, so `gamma_t` restricts to a
//! homomorphism G -> F.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rng::{StreamKind, Substream};
use super::ConstructionParams;
use crate::error::{Error, Result};
use crate::hypercore::{Edge, Hypergraph, Vertex};

/// Certificate of [`construct_coloring`]. `beta` is indexed by the
/// lexicographic rank of the pair; `gammas[t][x]` is `gamma_t(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairColoring {
    pub ell: usize,
    pub beta: Vec<u32>,
    pub gammas: Vec<Vec<Vertex>>,
}

fn pair_rank(i: Vertex, j: Vertex, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl PairColoring {
    pub fn vertex_count(&self) -> usize {
        self.gammas.first().map_or(0, Vec::len)
    }

    pub fn color(&self, a: Vertex, b: Vertex) -> u32 {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.beta[pair_rank(i, j, self.vertex_count())]
    }

    /// The color shared by every pair of `set`, if there is one.
    pub fn monochromatic_color(&self, set: &[Vertex]) -> Option<u32> {
        let t = self.color(set[0], set[1]);
        let mono = set
            .iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| self.color(a, b) == t));
        mono.then_some(t)
    }

    /// Re-derives edge membership of `set` from the certificate.
    pub fn admits(&self, set: &[Vertex], f: &Hypergraph) -> bool {
        if set.len() < 2 {
            return false;
        }
        let Some(t) = self.monochromatic_color(set) else {
            return false;
        };
        let image: Vec<Vertex> = set.iter().map(|&x| self.gammas[t as usize][x]).collect();
        f.has_edge_unsorted(&image) // an edge has distinct vertices, so injective
    }

    fn is_well_formed(&self, n: usize, f: &Hypergraph) -> bool {
        self.beta.len() == n * n.saturating_sub(1) / 2
            && self.beta.iter().all(|&c| (c as usize) < self.ell)
            && self.gammas.len() == self.ell
            && self
                .gammas
                .iter()
                .all(|g| g.len() == n && g.iter().all(|&v| v < f.vertex_count()))
    }
}

pub fn construct_coloring(
    n: usize,
    f: &Hypergraph,
    params: &ConstructionParams,
) -> Result<(Hypergraph, PairColoring)> {
    params.validate()?;
    let r = f.uniformity();
    if r < 3 {
        return Err(Error::invalid(
            "the pair coloring construction needs r >= 3",
        ));
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
    let ell = params.colors(n);
    let seed = params.seed;
    let pairs = n * (n - 1) / 2;
    let beta: Vec<u32> = (0..pairs)
        .into_par_iter()
        .map(|p| Substream::new(seed, StreamKind::PairColor, p as u64).below(ell as u64) as u32)
        .collect();
    let vf = f.vertex_count() as u64;
    let gammas: Vec<Vec<Vertex>> = (0..ell)
        .into_par_iter()
        .map(|t| {
            let mut s = Substream::new(seed, StreamKind::ColorMap, t as u64);
            (0..n).map(|_| s.below(vf) as Vertex).collect()
        })
        .collect();
    let coloring = PairColoring { ell, beta, gammas };
    debug_assert!(coloring.is_well_formed(n, f));

    let edges: Vec<Vec<Edge>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            let mut chosen = vec![first];
            grow(&coloring, f, n, r, &mut chosen, None, &mut found);
            found
        })
        .collect();
    let h = Hypergraph::new(r, n, edges.into_iter().flatten())?;
    Ok((h, coloring))
}

/// Extends `chosen` by larger vertices whose pairs with it all have color
/// `color` (fixed by the first pair).
fn grow(
    c: &PairColoring,
    f: &Hypergraph,
    n: usize,
    r: usize,
    chosen: &mut Vec<Vertex>,
    color: Option<u32>,
    out: &mut Vec<Edge>,
) {
    if chosen.len() == r {
        if c.admits(chosen, f) {
            out.push(chosen.clone());
        }
        return;
    }
    let last = *chosen.last().expect("nonempty");
    for x in last + 1..n {
        let t = color.unwrap_or_else(|| c.color(chosen[0], x));
        if chosen.iter().all(|&y| c.color(y, x) == t) {
            chosen.push(x);
            grow(c, f, n, r, chosen, Some(t), out);
            chosen.pop();
        }
    }
}
