//! Densities of the 2-shadow: `max (e(F') + offset) / (v(F') - 1)` over
//! nonempty subgraphs `F'` of the 2-shadow, with `v(F')` counting covered
//! vertices only. Offset 1 gives α_F, offset 0 gives β_F.
//!
//! The maximum is taken over vertex subsets `U`: any maximizer with covered
//! set `U` must use every shadow edge inside `U`, since dropping an edge
//! lowers the numerator at the same denominator. When the shadow has at most
//! [`EDGE_ORACLE_LIMIT`] edges, a second pass over all edge subsets
//! re-derives the value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::{canonical_form, Edge, Hypergraph, Vertex, CANON_MAX_VERTICES};
use crate::rational::Rational;

/// Largest shadow edge count for the all-edge-subsets cross-check.
pub const EDGE_ORACLE_LIMIT: usize = 20;
/// Largest covered vertex count for vertex-subset enumeration.
pub const MAX_SHADOW_VERTICES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub value: Rational,
    pub numerator_offset: u8,
    /// Covered vertices of the maximizing subgraph, in F's labels.
    pub witness_vertices: Vec<Vertex>,
    pub witness_edges: Vec<Edge>,
    pub verified_by_subset_oracle: bool,
}

impl DensityReport {
    /// Recomputes the functional on the witness.
    pub fn witness_value(&self) -> Rational {
        density(
            self.witness_edges.len(),
            self.witness_vertices.len(),
            self.numerator_offset,
        )
    }
}

fn density(edges: usize, vertices: usize, offset: u8) -> Rational {
    Rational::new((edges + offset as usize) as i64, vertices as i64 - 1)
}

pub fn alpha(f: &Hypergraph) -> Result<DensityReport> {
    shadow_density(f, 1)
}

pub fn beta(f: &Hypergraph) -> Result<DensityReport> {
    shadow_density(f, 0)
}

/// Whether the whole 2-shadow attains β_F on the full vertex set, i.e.
/// `β_F = e(∂_2 F) / (v(F) - 1)`.
pub fn check_concluding_condition(f: &Hypergraph) -> Result<bool> {
    let report = beta(f)?;
    let full = f.shadow(2)?.edge_count();
    Ok(report.value == density(full, f.vertex_count(), 0))
}

struct Candidate {
    value: Rational,
    mask: u32,
    size: u32,
}

fn shadow_density(f: &Hypergraph, offset: u8) -> Result<DensityReport> {
    if f.uniformity() < 2 {
        return Err(Error::invalid("shadow densities need r >= 2"));
    }
    if f.is_edgeless() {
        return Err(Error::invalid("F must have at least one edge"));
    }
    let shadow = f.shadow(2)?;
    let covered: Vec<Vertex> = shadow
        .degrees()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(v, _)| v)
        .collect();
    let m = covered.len();
    if m > MAX_SHADOW_VERTICES {
        return Err(Error::Capacity {
            what: "covered vertices of the 2-shadow",
            got: m,
            limit: MAX_SHADOW_VERTICES,
        });
    }
    let mut local = vec![usize::MAX; f.vertex_count()];
    for (i, &v) in covered.iter().enumerate() {
        local[v] = i;
    }
    let mut adj = vec![0u32; m];
    for e in shadow.edges() {
        let (a, b) = (local[e[0]], local[e[1]]);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }

    let mut best: Option<Rational> = None;
    let mut ties: Vec<Candidate> = Vec::new();
    for mask in 1u32..(1u32 << m) {
        let size = mask.count_ones();
        if size < 2 {
            continue;
        }
        let mut twice_edges = 0u32;
        let mut isolated = false;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & mask).count_ones();
            if d == 0 {
                isolated = true;
                break;
            }
            twice_edges += d;
        }
        if isolated {
            continue;
        }
        let value = density((twice_edges / 2) as usize, size as usize, offset);
        match best {
            Some(b) if value < b => continue,
            Some(b) if value == b => {}
            _ => {
                best = Some(value);
                ties.clear();
            }
        }
        ties.push(Candidate { value, mask, size });
    }

    let value = best.expect("an edge gives a two-vertex candidate");
    let min_size = ties.iter().map(|c| c.size).min().expect("nonempty");
    let mut chosen: Vec<(Option<crate::CanonicalForm>, Vec<Vertex>)> = ties
        .iter()
        .filter(|c| c.size == min_size)
        .map(|c| {
            debug_assert_eq!(c.value, value);
            let verts: Vec<Vertex> = (0..m)
                .filter(|&i| c.mask >> i & 1 == 1)
                .map(|i| covered[i])
                .collect();
            let form = (verts.len() <= CANON_MAX_VERTICES).then(|| {
                canonical_form(&shadow.induced(&verts).expect("in range")).expect("under cap")
            });
            (form, verts)
        })
        .collect();
    chosen.sort();
    let (_, witness_vertices) = chosen.swap_remove(0);
    let witness_edges: Vec<Edge> = shadow
        .edges()
        .iter()
        .filter(|e| e.iter().all(|v| witness_vertices.contains(v)))
        .cloned()
        .collect();

    let verified = if shadow.edge_count() <= EDGE_ORACLE_LIMIT {
        let oracle = edge_subset_maximum(&shadow, offset);
        if oracle != value {
            return Err(Error::Internal(format!(
                "vertex-subset maximum {value} disagrees with edge-subset maximum {oracle}"
            )));
        }
        true
    } else {
        false
    };

    Ok(DensityReport {
        value,
        numerator_offset: offset,
        witness_vertices,
        witness_edges,
        verified_by_subset_oracle: verified,
    })
}

/// Maximum of the functional over every nonempty edge subset of a 2-graph.
fn edge_subset_maximum(shadow: &Hypergraph, offset: u8) -> Rational {
    let edges = shadow.edges();
    let mut best = None;
    for mask in 1u32..(1u32 << edges.len()) {
        let mut touched = 0u64;
        for (i, e) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                touched |= 1 << e[0] | 1 << e[1];
            }
        }
        let v = density(
            mask.count_ones() as usize,
            touched.count_ones() as usize,
            offset,
        );
        if best.is_none_or(|b| v > b) {
            best = Some(v);
        }
    }
    best.expect("shadow has an edge")
}
