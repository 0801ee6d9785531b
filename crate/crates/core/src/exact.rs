//! Ground truth at tiny scale: maximum F-free induced subsets, isomorph-free
//! enumeration of G-free r-graphs, and the exact value of f_{F,G}(n).

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::{
    binomial, canonical_form, contains_copy, require_same_uniformity, CanonicalForm, Edge,
    Hypergraph, MapSearch, Vertex,
};

/// Default vertex limit of [`max_f_free_subset`].
pub const MAX_FREE_VERTICES: usize = 24;
pub const BRUTEFORCE_MAX_VERTICES: usize = 16;
/// Enumeration refuses more than this many candidate edges `C(n, r)`.
pub const ENUMERATION_MAX_SLOTS: u128 = 35;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FFreeResult {
    pub size: usize,
    pub witness: Vec<Vertex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaxFreeOptions {
    pub max_vertices: usize,
    /// Tighten the bound by greedily packing copies of F that each force out
    /// one undecided vertex.
    pub packing_bound: bool,
}

impl Default for MaxFreeOptions {
    fn default() -> Self {
        MaxFreeOptions {
            max_vertices: MAX_FREE_VERTICES,
            packing_bound: false,
        }
    }
}

fn check_pattern(f: &Hypergraph, name: &str) -> Result<()> {
    if f.is_edgeless() {
        return Err(Error::invalid(format!(
            "{name} must have at least one edge"
        )));
    }
    Ok(())
}

fn capacity(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        return Err(Error::Capacity { what, got, limit });
    }
    Ok(())
}

/// A largest vertex set whose induced subgraph has no copy of F; among
/// maximum sets the lexicographically least (as a sorted list) is returned.
pub fn max_f_free_subset(h: &Hypergraph, f: &Hypergraph) -> Result<FFreeResult> {
    max_f_free_subset_with(h, f, MaxFreeOptions::default())
}

pub fn max_f_free_subset_with(
    h: &Hypergraph,
    f: &Hypergraph,
    opts: MaxFreeOptions,
) -> Result<FFreeResult> {
    require_same_uniformity(h, f)?;
    check_pattern(f, "F")?;
    capacity("host vertex count", h.vertex_count(), opts.max_vertices)?;
    let mut bb = BranchAndBound {
        h,
        f,
        packing: opts.packing_bound,
        current: Vec::new(),
        best: Vec::new(),
        found: false,
    };
    bb.search(0);
    Ok(FFreeResult {
        size: bb.best.len(),
        witness: bb.best,
    })
}

struct BranchAndBound<'a> {
    h: &'a Hypergraph,
    f: &'a Hypergraph,
    packing: bool,
    current: Vec<Vertex>,
    best: Vec<Vertex>,
    found: bool,
}

impl BranchAndBound<'_> {
    // Include-first DFS over vertices in increasing order, replacing the
    // incumbent only on strict improvement: the first maximum reached is the
    // lexicographically least.
    fn search(&mut self, next: Vertex) {
        let n = self.h.vertex_count();
        if next == n {
            if !self.found || self.current.len() > self.best.len() {
                self.best = self.current.clone();
                self.found = true;
            }
            return;
        }
        if self.found && self.bound(next) <= self.best.len() {
            return;
        }
        self.current.push(next);
        if !self.closes_copy(next) {
            self.search(next + 1);
        }
        self.current.pop();
        self.search(next + 1);
    }

    fn bound(&self, next: Vertex) -> usize {
        let simple = self.current.len() + self.h.vertex_count() - next;
        if !self.packing {
            return simple;
        }
        simple - self.packing_count(next)
    }

    /// Greedy count of copies of F inside `current ∪ {next..n}` whose
    /// undecided parts are disjoint. Each such copy meets the undecided
    /// vertices (the current set is F-free) and costs one of them.
    fn packing_count(&self, next: Vertex) -> usize {
        let n = self.h.vertex_count();
        let mut free: Vec<bool> = (0..n).map(|v| v >= next).collect();
        let mut count = 0;
        loop {
            let pool: Vec<Vertex> = self
                .current
                .iter()
                .copied()
                .chain((next..n).filter(|&v| free[v]))
                .collect();
            let Some(map) = MapSearch::embeddings(self.f, self.h).within(&pool).first() else {
                return count;
            };
            for u in map {
                if u >= next {
                    free[u] = false;
                }
            }
            count += 1;
        }
    }

    /// Whether adding `v` (already pushed) creates a copy of F; such a copy
    /// must use `v`.
    fn closes_copy(&self, v: Vertex) -> bool {
        if self.current.len() < self.f.vertex_count() {
            return false;
        }
        (0..self.f.vertex_count()).any(|x| {
            MapSearch::embeddings(self.f, self.h)
                .within(&self.current)
                .pin(x, v)
                .exists()
        })
    }
}

/// Exhaustive maximum over all `2^n` vertex subsets.
pub fn max_f_free_bruteforce(h: &Hypergraph, f: &Hypergraph) -> Result<usize> {
    require_same_uniformity(h, f)?;
    check_pattern(f, "F")?;
    let n = h.vertex_count();
    capacity("host vertex count", n, BRUTEFORCE_MAX_VERTICES)?;
    let free = |mask: u32| {
        let set: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        !MapSearch::embeddings(f, h).within(&set).exists()
    };
    Ok((0u32..1 << n)
        .into_par_iter()
        .filter(|&m| free(m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// One representative per isomorphism class of G-free r-graphs on `n`
/// vertices, in increasing edge count and, within a count, increasing
/// canonical form.
///
/// Classes with `m + 1` edges are the canonical forms of every one-edge
/// extension of a class with `m` edges; an extension containing G is
/// dropped, and so are all of its supersets.
pub fn enumerate_g_free(n: usize, r: usize, g: &Hypergraph) -> Result<GFreeClasses> {
    if g.uniformity() != r {
        return Err(Error::invalid(format!(
            "G is {}-uniform, expected {r}",
            g.uniformity()
        )));
    }
    if r == 0 {
        return Err(Error::invalid("uniformity must be at least 1"));
    }
    check_pattern(g, "G")?;
    let slots = binomial(n, r);
    if slots > ENUMERATION_MAX_SLOTS {
        return Err(Error::Capacity {
            what: "candidate edges C(n, r)",
            got: slots.min(usize::MAX as u128) as usize,
            limit: ENUMERATION_MAX_SLOTS as usize,
        });
    }
    let empty = Hypergraph::empty(r, n)?;
    let level = vec![canonical_form(&empty)?];
    Ok(GFreeClasses {
        g: g.clone(),
        slots: (0..n).combinations(r).collect(),
        level,
        pos: 0,
    })
}

/// Iterator returned by [`enumerate_g_free`].
pub struct GFreeClasses {
    g: Hypergraph,
    slots: Vec<Edge>,
    level: Vec<CanonicalForm>,
    pos: usize,
}

impl GFreeClasses {
    fn advance(&mut self) -> Result<()> {
        let g = &self.g;
        let slots = &self.slots;
        let next: Vec<BTreeSet<CanonicalForm>> = self
            .level
            .par_iter()
            .map(|form| -> Result<BTreeSet<CanonicalForm>> {
                let h = form.to_hypergraph();
                let mut out = BTreeSet::new();
                for e in slots.iter().filter(|e| !h.has_edge(e)) {
                    let bigger = Hypergraph::new(
                        h.uniformity(),
                        h.vertex_count(),
                        h.edges().iter().chain(std::iter::once(e)),
                    )?;
                    if contains_copy(&bigger, g)?.is_none() {
                        out.insert(canonical_form(&bigger)?);
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let merged: BTreeSet<CanonicalForm> = next.into_iter().flatten().collect();
        self.level = merged.into_iter().collect();
        self.pos = 0;
        Ok(())
    }
}

impl Iterator for GFreeClasses {
    type Item = Hypergraph;

    fn next(&mut self) -> Option<Hypergraph> {
        if self.pos == self.level.len() {
            if self.level.is_empty() {
                return None;
            }
            // Every input was checked up front, so failures here are bugs.
            self.advance().expect("enumeration step");
        }
        let h = self.level.get(self.pos)?.to_hypergraph();
        self.pos += 1;
        Some(h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FExact {
    pub value: usize,
    /// First enumerated G-free r-graph attaining the minimum.
    pub extremal: Hypergraph,
    pub witness: Vec<Vertex>,
    pub classes: usize,
}

/// `f_{F,G}(n)`: the least, over G-free r-graphs H on `n` vertices, of the
/// largest F-free induced subgraph of H.
pub fn f_exact(f: &Hypergraph, g: &Hypergraph, n: usize) -> Result<FExact> {
    require_same_uniformity(f, g)?;
    check_pattern(f, "F")?;
    let classes: Vec<Hypergraph> = enumerate_g_free(n, f.uniformity(), g)?.collect();
    let results = classes
        .par_iter()
        .map(|h| max_f_free_subset(h, f))
        .collect::<Result<Vec<_>>>()?;
    let (idx, best) = results
        .iter()
        .enumerate()
        .min_by_key(|(i, res)| (res.size, *i))
        .ok_or_else(|| Error::Internal("enumeration yielded no hypergraph".into()))?;
    Ok(FExact {
        value: best.size,
        extremal: classes[idx].clone(),
        witness: best.witness.clone(),
        classes: classes.len(),
    })
}
