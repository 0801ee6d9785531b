//! Backtracking search for edge-preserving vertex maps.
//!
//! One engine serves both subgraph embeddings (injective) and
//! homomorphisms (edges map to edges, no global injectivity). Pattern
//! vertices are placed in a fixed connectivity-first order; each candidate
//! host vertex must keep the image of every partially placed pattern edge
//! inside some host edge (link pruning), and candidates for a vertex with a
//! placed neighbour are drawn from that neighbour's host link only.

use std::collections::HashSet;
use std::ops::ControlFlow;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{require_same_uniformity, Embedding, Hypergraph, Vertex};
use crate::error::{Error, Result};

struct Step {
    vertex: Vertex,
    /// Placed vertex sharing an edge with `vertex`, if any.
    anchor: Option<Vertex>,
    /// For each pattern edge through `vertex`: its vertices placed so far.
    partial_edges: Vec<Vec<Vertex>>,
    degree: usize,
}

/// Configurable map search from `pattern` into `host`.
pub struct MapSearch<'a> {
    pattern: &'a Hypergraph,
    host: &'a Hypergraph,
    injective: bool,
    allowed: Option<Vec<bool>>,
    pins: Vec<(Vertex, Vertex)>,
}

impl<'a> MapSearch<'a> {
    /// Injective maps (copies of `pattern` in `host`).
    pub fn embeddings(pattern: &'a Hypergraph, host: &'a Hypergraph) -> Self {
        MapSearch {
            pattern,
            host,
            injective: true,
            allowed: None,
            pins: Vec::new(),
        }
    }

    /// Homomorphisms: every edge maps onto an edge, with distinct images
    /// inside each edge.
    pub fn homomorphisms(pattern: &'a Hypergraph, host: &'a Hypergraph) -> Self {
        MapSearch {
            injective: false,
            ..Self::embeddings(pattern, host)
        }
    }

    /// Restricts images to the given host vertices.
    pub fn within(mut self, host_vertices: &[Vertex]) -> Self {
        let mut allowed = vec![false; self.host.vertex_count()];
        for &u in host_vertices {
            if u < allowed.len() {
                allowed[u] = true;
            }
        }
        self.allowed = Some(allowed);
        self
    }

    /// Forces pattern vertex `x` onto host vertex `u`.
    pub fn pin(mut self, x: Vertex, u: Vertex) -> Self {
        self.pins.push((x, u));
        self
    }

    /// First map in search order.
    pub fn first(&self) -> Option<Vec<Vertex>> {
        let mut found = None;
        self.for_each(|m| {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    pub fn exists(&self) -> bool {
        self.first().is_some()
    }

    pub fn count(&self) -> u128 {
        let mut total = 0u128;
        self.for_each(|_| {
            total += 1;
            ControlFlow::Continue(())
        });
        total
    }

    /// Visits every map in deterministic order until `visit` breaks.
    pub fn for_each<F>(&self, mut visit: F)
    where
        F: FnMut(&[Vertex]) -> ControlFlow<()>,
    {
        if self.pattern.uniformity() != self.host.uniformity() {
            return;
        }
        if self.injective && self.pattern.vertex_count() > self.host.vertex_count() {
            return;
        }
        let Some(plan) = self.plan() else { return };
        let ctx = Context::new(self);
        let mut map = vec![usize::MAX; self.pattern.vertex_count()];
        let mut used = vec![false; self.host.vertex_count()];
        let _ = ctx.extend(&plan, 0, &mut map, &mut used, &mut visit);
    }

    fn plan(&self) -> Option<Vec<Step>> {
        let p = self.pattern;
        let n = p.vertex_count();
        let deg = p.degrees();
        let inc = p.incidence();
        let mut placed = vec![false; n];
        let mut order: Vec<Vertex> = Vec::with_capacity(n);
        for &(x, u) in &self.pins {
            if x >= n || u >= self.host.vertex_count() {
                return None;
            }
            if !placed[x] {
                placed[x] = true;
                order.push(x);
            }
        }
        while order.len() < n {
            let next = (0..n)
                .filter(|&x| !placed[x])
                .max_by_key(|&x| {
                    let touching = inc[x]
                        .iter()
                        .filter(|&&ei| p.edges()[ei].iter().any(|&y| placed[y]))
                        .count();
                    (touching, deg[x], std::cmp::Reverse(x))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }

        let mut position = vec![0; n];
        for (i, &x) in order.iter().enumerate() {
            position[x] = i;
        }
        let steps = order
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let partial_edges: Vec<Vec<Vertex>> = inc[x]
                    .iter()
                    .map(|&ei| {
                        p.edges()[ei]
                            .iter()
                            .copied()
                            .filter(|&y| position[y] <= i)
                            .collect()
                    })
                    .collect();
                let anchor = partial_edges
                    .iter()
                    .flat_map(|e| e.iter().copied())
                    .filter(|&y| y != x)
                    .min_by_key(|&y| position[y]);
                Step {
                    vertex: x,
                    anchor,
                    partial_edges,
                    degree: deg[x],
                }
            })
            .collect();
        Some(steps)
    }
}

struct Context<'s, 'a> {
    search: &'s MapSearch<'a>,
    /// Every sorted subset (size >= 2) of every host edge.
    closure: HashSet<Vec<Vertex>>,
    links: Vec<Vec<Vertex>>,
    host_degree: Vec<usize>,
    pin_of: Vec<Option<Vertex>>,
}

impl<'s, 'a> Context<'s, 'a> {
    fn new(search: &'s MapSearch<'a>) -> Self {
        let host = search.host;
        let r = host.uniformity();
        let mut closure = HashSet::new();
        let mut links = vec![Vec::new(); host.vertex_count()];
        for e in host.edges() {
            for size in 2..r {
                for sub in e.iter().copied().combinations(size) {
                    closure.insert(sub);
                }
            }
            for &u in e {
                links[u].extend(e.iter().copied().filter(|&w| w != u));
            }
        }
        for l in &mut links {
            l.sort_unstable();
            l.dedup();
        }
        let mut pin_of = vec![None; search.pattern.vertex_count()];
        for &(x, u) in &search.pins {
            pin_of[x] = Some(u);
        }
        Context {
            search,
            closure,
            links,
            host_degree: host.degrees(),
            pin_of,
        }
    }

    fn candidates(&self, step: &Step, map: &[Vertex]) -> Vec<Vertex> {
        if let Some(u) = self.pin_of[step.vertex] {
            return vec![u];
        }
        match step.anchor {
            Some(y) => self.links[map[y]].clone(),
            None => (0..self.search.host.vertex_count()).collect(),
        }
    }

    fn admissible(&self, step: &Step, u: Vertex, map: &[Vertex], used: &[bool]) -> bool {
        let s = self.search;
        if let Some(allowed) = &s.allowed {
            if !allowed[u] {
                return false;
            }
        }
        if s.injective {
            if used[u] || self.host_degree[u] < step.degree {
                return false;
            }
        } else if step.degree > 0 && self.host_degree[u] == 0 {
            return false;
        }
        let r = s.host.uniformity();
        let mut image = Vec::with_capacity(r);
        for part in &step.partial_edges {
            if part.len() < 2 {
                continue;
            }
            image.clear();
            image.extend(
                part.iter()
                    .map(|&y| if y == step.vertex { u } else { map[y] }),
            );
            image.sort_unstable();
            if image.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
            let ok = if part.len() == r {
                s.host.has_edge(&image)
            } else {
                self.closure.contains(&image)
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn extend<F>(
        &self,
        plan: &[Step],
        depth: usize,
        map: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[Vertex]) -> ControlFlow<()>,
    {
        let Some(step) = plan.get(depth) else {
            return visit(map);
        };
        for u in self.candidates(step, map) {
            if !self.admissible(step, u, map, used) {
                continue;
            }
            map[step.vertex] = u;
            used[u] = true;
            let flow = self.extend(plan, depth + 1, map, used, visit);
            used[u] = false;
            map[step.vertex] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// An embedding of `pattern` into `host`, if one exists.
pub fn contains_copy(host: &Hypergraph, pattern: &Hypergraph) -> Result<Option<Embedding>> {
    require_same_uniformity(host, pattern)?;
    Ok(MapSearch::embeddings(pattern, host)
        .first()
        .map(|map| Embedding { map }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingCount {
    pub embeddings: u128,
    pub automorphisms: u128,
    pub copies: u128,
}

/// Counts injective edge-preserving maps `pattern -> host` and divides by
/// `|Aut(pattern)|`.
pub fn count_embeddings(pattern: &Hypergraph, host: &Hypergraph) -> Result<EmbeddingCount> {
    require_same_uniformity(host, pattern)?;
    let embeddings = MapSearch::embeddings(pattern, host).count();
    let automorphisms = MapSearch::embeddings(pattern, pattern).count();
    if automorphisms == 0 || !embeddings.is_multiple_of(automorphisms) {
        return Err(Error::Internal(format!(
            "{embeddings} embeddings not divisible by {automorphisms} automorphisms"
        )));
    }
    Ok(EmbeddingCount {
        embeddings,
        automorphisms,
        copies: embeddings / automorphisms,
    })
}
