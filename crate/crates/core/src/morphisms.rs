//! Homomorphisms, k-shadow homomorphisms, k-tight connectivity and
//! bounded-depth membership in F-iterated blowups, each with a certificate.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::{
    canonical_form, require_same_uniformity, Edge, Embedding, Hypergraph, MapSearch, Vertex,
    CANON_MAX_VERTICES,
};

/// A vertex map `G -> F` sending every edge onto an edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomWitness {
    pub map: Vec<Vertex>,
}

impl HomWitness {
    pub fn is_valid(&self, g: &Hypergraph, f: &Hypergraph) -> bool {
        self.map.len() == g.vertex_count()
            && self.map.iter().all(|&u| u < f.vertex_count())
            && g.edges().iter().all(|e| {
                let img: Vec<Vertex> = e.iter().map(|&x| self.map[x]).collect();
                f.has_edge_unsorted(&img)
            })
    }
}

pub fn find_homomorphism(g: &Hypergraph, f: &Hypergraph) -> Result<Option<HomWitness>> {
    require_same_uniformity(g, f)?;
    Ok(MapSearch::homomorphisms(g, f)
        .first()
        .map(|map| HomWitness { map }))
}

/// `g_S` for one k-set: `image[i]` is the image of `set[i]`, and `target`
/// is the sorted image `f(S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowEntry {
    pub set: Vec<Vertex>,
    pub target: Vec<Vertex>,
    pub image: Vec<Vertex>,
}

/// `g_e` for one edge of `G`, onto the edge `target` of `F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub edge: Vec<Vertex>,
    pub target: Vec<Vertex>,
    pub image: Vec<Vertex>,
}

/// Certificate that `G` is k-shadow-homomorphic to `F`.
///
/// Both maps are sorted by their source set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowHomWitness {
    pub k: usize,
    pub shadow_map: Vec<ShadowEntry>,
    pub edge_map: Vec<EdgeEntry>,
}

fn check_k(g: &Hypergraph, k: usize) -> Result<()> {
    if k == 0 || k > g.uniformity() {
        return Err(Error::invalid(format!(
            "k = {k} must satisfy 1 <= k <= r = {}",
            g.uniformity()
        )));
    }
    Ok(())
}

/// Position subsets of size `k` inside an r-edge.
fn position_subsets(r: usize, k: usize) -> Vec<Vec<usize>> {
    (0..r).combinations(k).collect()
}

struct ShadowSearch<'a> {
    g: &'a Hypergraph,
    f: &'a Hypergraph,
    /// For each G edge: (k-set id, positions inside the edge), per k-subset.
    edge_ksets: Vec<Vec<(usize, Vec<usize>)>>,
    /// All edge images: for each F edge, each ordering of its vertices.
    options: Vec<Vec<Vertex>>,
    /// G edges sharing a k-set with the given edge.
    neighbours: Vec<Vec<usize>>,
    order: Vec<usize>,
    /// Current `g_S` per k-set id, aligned with the sorted k-set.
    assigned: Vec<Option<Vec<Vertex>>>,
    chosen: Vec<Option<usize>>,
}

impl<'a> ShadowSearch<'a> {
    fn new(g: &'a Hypergraph, f: &'a Hypergraph, k: usize) -> Self {
        let r = g.uniformity();
        let subsets = position_subsets(r, k);
        let mut ids: HashMap<Vec<Vertex>, usize> = HashMap::new();
        let edge_ksets: Vec<Vec<(usize, Vec<usize>)>> = g
            .edges()
            .iter()
            .map(|e| {
                subsets
                    .iter()
                    .map(|pos| {
                        let set: Vec<Vertex> = pos.iter().map(|&p| e[p]).collect();
                        let next = ids.len();
                        let id = *ids.entry(set).or_insert(next);
                        (id, pos.clone())
                    })
                    .collect()
            })
            .collect();
        let options = f
            .edges()
            .iter()
            .flat_map(|t| t.iter().copied().permutations(r))
            .collect();

        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); ids.len()];
        for (ei, ks) in edge_ksets.iter().enumerate() {
            for (id, _) in ks {
                holders[*id].push(ei);
            }
        }
        let neighbours: Vec<Vec<usize>> = edge_ksets
            .iter()
            .enumerate()
            .map(|(ei, ks)| {
                let mut ns: Vec<usize> = ks
                    .iter()
                    .flat_map(|(id, _)| holders[*id].iter().copied())
                    .filter(|&other| other != ei)
                    .collect();
                ns.sort_unstable();
                ns.dedup();
                ns
            })
            .collect();

        let order = overlap_order(&edge_ksets, &neighbours);
        ShadowSearch {
            g,
            f,
            edge_ksets,
            options,
            neighbours,
            order,
            assigned: vec![None; ids.len()],
            chosen: vec![None; g.edge_count()],
        }
    }

    fn consistent(&self, edge: usize, option: &[Vertex]) -> bool {
        self.edge_ksets[edge]
            .iter()
            .all(|(id, pos)| match &self.assigned[*id] {
                Some(img) => pos.iter().zip(img).all(|(&p, &v)| option[p] == v),
                None => true,
            })
    }

    fn has_option(&self, edge: usize) -> bool {
        self.options.iter().any(|o| self.consistent(edge, o))
    }

    fn solve(&mut self, depth: usize) -> bool {
        let Some(&edge) = self.order.get(depth) else {
            return true;
        };
        for oi in 0..self.options.len() {
            if !self.consistent(edge, &self.options[oi]) {
                continue;
            }
            let mut fresh = Vec::new();
            for (id, pos) in &self.edge_ksets[edge] {
                if self.assigned[*id].is_none() {
                    self.assigned[*id] = Some(pos.iter().map(|&p| self.options[oi][p]).collect());
                    fresh.push(*id);
                }
            }
            self.chosen[edge] = Some(oi);
            let viable = self.neighbours[edge]
                .iter()
                .all(|&nb| self.chosen[nb].is_some() || self.has_option(nb));
            if viable && self.solve(depth + 1) {
                return true;
            }
            self.chosen[edge] = None;
            for id in fresh {
                self.assigned[id] = None;
            }
        }
        false
    }

    fn witness(&self, k: usize) -> ShadowHomWitness {
        let mut shadow: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
        let mut edge_map = Vec::with_capacity(self.g.edge_count());
        for (ei, e) in self.g.edges().iter().enumerate() {
            let image = self.options[self.chosen[ei].expect("solved")].clone();
            for (_, pos) in &self.edge_ksets[ei] {
                let set: Vec<Vertex> = pos.iter().map(|&p| e[p]).collect();
                shadow
                    .entry(set)
                    .or_insert_with(|| pos.iter().map(|&p| image[p]).collect());
            }
            let mut target = image.clone();
            target.sort_unstable();
            edge_map.push(EdgeEntry {
                edge: e.clone(),
                target,
                image,
            });
        }
        let shadow_map = shadow
            .into_iter()
            .map(|(set, image)| {
                let mut target = image.clone();
                target.sort_unstable();
                ShadowEntry { set, target, image }
            })
            .collect();
        debug_assert!(self.f.edge_count() > 0 || edge_map.is_empty());
        ShadowHomWitness {
            k,
            shadow_map,
            edge_map,
        }
    }
}

/// Edge processing order: repeatedly take the edge with the most k-sets
/// already covered, starting a new component from the lowest unvisited edge.
fn overlap_order(edge_ksets: &[Vec<(usize, Vec<usize>)>], neighbours: &[Vec<usize>]) -> Vec<usize> {
    let m = edge_ksets.len();
    let kset_total = edge_ksets
        .iter()
        .flat_map(|ks| ks.iter().map(|(id, _)| *id))
        .max()
        .map_or(0, |x| x + 1);
    let mut covered = vec![false; kset_total];
    let mut done = vec![false; m];
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let next = (0..m)
            .filter(|&e| !done[e])
            .max_by_key(|&e| {
                let shared = edge_ksets[e].iter().filter(|(id, _)| covered[*id]).count();
                let touching = neighbours[e].iter().filter(|&&nb| done[nb]).count();
                (shared, touching, std::cmp::Reverse(e))
            })
            .expect("edge remains");
        done[next] = true;
        for (id, _) in &edge_ksets[next] {
            covered[*id] = true;
        }
        order.push(next);
    }
    order
}

/// Decides whether `g` is k-shadow-homomorphic to `f`.
pub fn find_shadow_homomorphism(
    g: &Hypergraph,
    f: &Hypergraph,
    k: usize,
) -> Result<Option<ShadowHomWitness>> {
    require_same_uniformity(g, f)?;
    check_k(g, k)?;
    let mut search = ShadowSearch::new(g, f, k);
    Ok(search.solve(0).then(|| search.witness(k)))
}

/// A reason a shadow-homomorphism witness is rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    MissingShadowEntry {
        set: Vec<Vertex>,
    },
    UnexpectedShadowEntry {
        set: Vec<Vertex>,
    },
    MalformedShadowEntry {
        set: Vec<Vertex>,
    },
    TargetNotInShadow {
        set: Vec<Vertex>,
    },
    MissingEdgeEntry {
        edge: Vec<Vertex>,
    },
    UnexpectedEdgeEntry {
        edge: Vec<Vertex>,
    },
    MalformedEdgeEntry {
        edge: Vec<Vertex>,
    },
    TargetNotAnEdge {
        edge: Vec<Vertex>,
    },
    GluingBroken {
        edge: Vec<Vertex>,
        set: Vec<Vertex>,
    },
    /// Two edges of a tight triple share a target (only checked for k = r - 1).
    TightTripleCollision {
        first: Vec<Vertex>,
        second: Vec<Vertex>,
        third: Vec<Vertex>,
    },
}

fn is_bijection_onto(image: &[Vertex], target: &[Vertex], len: usize) -> bool {
    let mut sorted = image.to_vec();
    sorted.sort_unstable();
    image.len() == len && sorted == target && sorted.windows(2).all(|w| w[0] < w[1])
}

/// Every violated witness invariant, in a fixed order. Empty means valid.
pub fn audit_shadow_hom(
    g: &Hypergraph,
    f: &Hypergraph,
    k: usize,
    w: &ShadowHomWitness,
) -> Result<Vec<Violation>> {
    require_same_uniformity(g, f)?;
    check_k(g, k)?;
    if w.k != k {
        return Err(Error::invalid(format!(
            "witness is for k = {}, asked to check k = {k}",
            w.k
        )));
    }
    let r = g.uniformity();
    let f_shadow = f.shadow(k)?;
    let g_shadow = g.shadow(k)?;
    let mut out = Vec::new();

    let mut shadow: HashMap<&[Vertex], &ShadowEntry> = HashMap::new();
    for entry in &w.shadow_map {
        if !g_shadow.has_edge(&entry.set) || shadow.insert(&entry.set, entry).is_some() {
            out.push(Violation::UnexpectedShadowEntry {
                set: entry.set.clone(),
            });
            continue;
        }
        if !is_bijection_onto(&entry.image, &entry.target, k) {
            out.push(Violation::MalformedShadowEntry {
                set: entry.set.clone(),
            });
        } else if !f_shadow.has_edge(&entry.target) {
            out.push(Violation::TargetNotInShadow {
                set: entry.set.clone(),
            });
        }
    }
    for s in g_shadow.edges() {
        if !shadow.contains_key(s.as_slice()) {
            out.push(Violation::MissingShadowEntry { set: s.clone() });
        }
    }

    let mut edges: HashMap<&[Vertex], &EdgeEntry> = HashMap::new();
    for entry in &w.edge_map {
        if !g.has_edge(&entry.edge) || edges.insert(&entry.edge, entry).is_some() {
            out.push(Violation::UnexpectedEdgeEntry {
                edge: entry.edge.clone(),
            });
            continue;
        }
        if !is_bijection_onto(&entry.image, &entry.target, r) {
            out.push(Violation::MalformedEdgeEntry {
                edge: entry.edge.clone(),
            });
            continue;
        }
        if !f.has_edge(&entry.target) {
            out.push(Violation::TargetNotAnEdge {
                edge: entry.edge.clone(),
            });
        }
        for pos in position_subsets(r, k) {
            let set: Vec<Vertex> = pos.iter().map(|&p| entry.edge[p]).collect();
            let restricted: Vec<Vertex> = pos.iter().map(|&p| entry.image[p]).collect();
            let glued = shadow
                .get(set.as_slice())
                .is_some_and(|s| s.image == restricted);
            if !glued {
                out.push(Violation::GluingBroken {
                    edge: entry.edge.clone(),
                    set,
                });
            }
        }
    }
    for e in g.edges() {
        if !edges.contains_key(e.as_slice()) {
            out.push(Violation::MissingEdgeEntry { edge: e.clone() });
        }
    }

    if r >= 2 && k == r - 1 {
        out.extend(tight_triple_collisions(g, &edges));
    }
    Ok(out)
}

/// Edges `E1, E2, E3` with pairwise intersections of size r - 1 and a common
/// intersection of size r - 2 must have distinct targets for `E1`, `E2`.
fn tight_triple_collisions(
    g: &Hypergraph,
    edges: &HashMap<&[Vertex], &EdgeEntry>,
) -> Vec<Violation> {
    let r = g.uniformity();
    let meet = |a: &Edge, b: &Edge| a.iter().filter(|v| b.contains(v)).count();
    let es = g.edges();
    let mut out = Vec::new();
    for (i, j) in (0..es.len()).tuple_combinations() {
        if meet(&es[i], &es[j]) != r - 1 {
            continue;
        }
        let (Some(a), Some(b)) = (edges.get(es[i].as_slice()), edges.get(es[j].as_slice())) else {
            continue;
        };
        if a.target != b.target {
            continue;
        }
        let common: Vec<Vertex> = es[i]
            .iter()
            .copied()
            .filter(|v| es[j].contains(v))
            .collect();
        let third = (0..es.len()).find(|&l| {
            l != i
                && l != j
                && meet(&es[i], &es[l]) == r - 1
                && meet(&es[j], &es[l]) == r - 1
                && common.iter().filter(|v| es[l].contains(v)).count() == r - 2
        });
        if let Some(l) = third {
            out.push(Violation::TightTripleCollision {
                first: es[i].clone(),
                second: es[j].clone(),
                third: es[l].clone(),
            });
        }
    }
    out
}

pub fn verify_shadow_hom(
    g: &Hypergraph,
    f: &Hypergraph,
    k: usize,
    w: &ShadowHomWitness,
) -> Result<bool> {
    Ok(audit_shadow_hom(g, f, k, w)?.is_empty())
}

/// Edge ordering in which every edge after the first meets an earlier one in
/// at least `k` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightOrder {
    pub k: usize,
    pub order: Vec<Edge>,
}

impl TightOrder {
    pub fn is_valid(&self, g: &Hypergraph) -> bool {
        let mut sorted = self.order.clone();
        sorted.sort();
        if sorted != g.edges() || sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        (1..self.order.len()).all(|i| {
            self.order[..i]
                .iter()
                .any(|prev| prev.iter().filter(|v| self.order[i].contains(v)).count() >= self.k)
        })
    }
}

/// Breadth-first sweep over the graph on edges joined when they share at
/// least `k` vertices. `None` when that graph is disconnected or empty.
pub fn is_k_tightly_connected(g: &Hypergraph, k: usize) -> Result<Option<TightOrder>> {
    check_k(g, k)?;
    let es = g.edges();
    if es.is_empty() {
        return Ok(None);
    }
    let mut seen = vec![false; es.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut order = Vec::with_capacity(es.len());
    while let Some(i) = queue.pop_front() {
        order.push(es[i].clone());
        for j in 0..es.len() {
            if !seen[j] && es[i].iter().filter(|v| es[j].contains(v)).count() >= k {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    Ok((order.len() == es.len()).then_some(TightOrder { k, order }))
}

/// Certificate that `G` sits inside an F-iterated blowup.
///
/// Replaying `steps` from `F` (each step is `H <- H(v, F)` for the listed
/// vertex `v` of the current iterate) yields a host in which `embedding`
/// is a copy of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupCertificate {
    pub steps: Vec<Vertex>,
    pub embedding: Embedding,
}

impl BlowupCertificate {
    pub fn replay(&self, f: &Hypergraph) -> Result<Hypergraph> {
        self.steps
            .iter()
            .try_fold(f.clone(), |h, &v| h.blowup_with(v, f))
    }

    pub fn is_valid(&self, g: &Hypergraph, f: &Hypergraph) -> bool {
        self.replay(f)
            .is_ok_and(|host| self.embedding.is_valid(g, &host))
    }
}

/// Searches F-iterated blowups reachable in at most `max_steps` steps, level
/// by level, for one that contains `g`.
///
/// Iterates are deduplicated up to isomorphism while they fit the canonical
/// form cap. `None` only means no such blowup within `max_steps`.
pub fn is_sub_iterated_blowup(
    g: &Hypergraph,
    f: &Hypergraph,
    max_steps: usize,
) -> Result<Option<BlowupCertificate>> {
    require_same_uniformity(g, f)?;
    if f.vertex_count() == 0 {
        return Err(Error::invalid("F must have at least one vertex"));
    }
    let mut level: Vec<(Hypergraph, Vec<Vertex>)> = vec![(f.clone(), Vec::new())];
    for depth in 0..=max_steps {
        for (host, steps) in &level {
            if host.vertex_count() < g.vertex_count() || host.edge_count() < g.edge_count() {
                continue;
            }
            if let Some(map) = MapSearch::embeddings(g, host).first() {
                return Ok(Some(BlowupCertificate {
                    steps: steps.clone(),
                    embedding: Embedding { map },
                }));
            }
        }
        if depth == max_steps {
            break;
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (host, steps) in &level {
            for v in 0..host.vertex_count() {
                let child = host.blowup_with(v, f)?;
                if child.vertex_count() <= CANON_MAX_VERTICES
                    && !seen.insert(canonical_form(&child)?)
                {
                    continue;
                }
                let mut path = steps.clone();
                path.push(v);
                next.push((child, path));
            }
        }
        level = next;
    }
    Ok(None)
}
