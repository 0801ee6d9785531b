//! Supersaturation extraction at desk scale.
//!
//! Starting from a copy of F, each step picks a vertex `v` of the current
//! target `G'`, finds the copy of `G' - v` with the most extensions back to
//! `G'`, and looks for a copy of F among the extending vertices. Together they
//! form a copy of `G'(v, F)`, the next target.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::{require_same_uniformity, Embedding, Hypergraph, MapSearch, Vertex};

/// A copy of `G - v` together with every host vertex that completes it to a
/// copy of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichExtension {
    pub vertex: Vertex,
    /// Host image of each vertex of `G`; `None` at `vertex`.
    pub base: Vec<Option<Vertex>>,
    pub extenders: Vec<Vertex>,
}

impl RichExtension {
    pub fn embedding_with(&self, u: Vertex) -> Embedding {
        Embedding {
            map: self.base.iter().map(|b| b.unwrap_or(u)).collect(),
        }
    }
}

pub fn richest_extension(
    h: &Hypergraph,
    g: &Hypergraph,
    v: Vertex,
    threshold: usize,
) -> Result<Option<RichExtension>> {
    require_same_uniformity(h, g)?;
    if v >= g.vertex_count() {
        return Err(Error::invalid(format!(
            "vertex {v} is not in G ({} vertices)",
            g.vertex_count()
        )));
    }
    let rest = g.remove_vertex(v)?;
    // Vertex i of `rest` is vertex `lift(i)` of g.
    let lift = |i: Vertex| if i < v { i } else { i + 1 };
    let down = |x: Vertex| if x < v { x } else { x - 1 };
    let links: Vec<Vec<Vertex>> = g
        .edges()
        .iter()
        .filter(|e| e.contains(&v))
        .map(|e| e.iter().copied().filter(|&x| x != v).map(down).collect())
        .collect();

    let mut best: Option<(Vec<Vertex>, Vec<Vertex>)> = None;
    let mut used = vec![false; h.vertex_count()];
    let mut scratch = Vec::with_capacity(g.uniformity());
    MapSearch::embeddings(&rest, h).for_each(|map| {
        for &u in map {
            used[u] = true;
        }
        let extenders: Vec<Vertex> = (0..h.vertex_count())
            .filter(|&u| !used[u])
            .filter(|&u| {
                links.iter().all(|link| {
                    scratch.clear();
                    scratch.extend(link.iter().map(|&x| map[x]));
                    scratch.push(u);
                    scratch.sort_unstable();
                    h.has_edge(&scratch)
                })
            })
            .collect();
        for &u in map {
            used[u] = false;
        }
        if best.as_ref().is_none_or(|(_, b)| extenders.len() > b.len()) {
            best = Some((map.to_vec(), extenders));
        }
        ControlFlow::Continue(())
    });

    Ok(best
        .filter(|(_, ext)| ext.len() >= threshold)
        .map(|(map, extenders)| {
            let mut base = vec![None; g.vertex_count()];
            for (i, &u) in map.iter().enumerate() {
                base[lift(i)] = Some(u);
            }
            RichExtension {
                vertex: v,
                base,
                extenders,
            }
        }))
}

/// Final state of a successful extraction: the iterated blowup reached by
/// replaying `steps` from F, and its copy in the host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extraction {
    pub steps: Vec<Vertex>,
    pub target: Hypergraph,
    pub embedding: Embedding,
}

/// Runs the extraction for the given step vertices; `None` when some step
/// (or the initial copy of F) cannot be found.
///
/// Every step vertex must exist in the target at that point, which is
/// checked before any search.
pub fn extract_blowup_copy(
    h: &Hypergraph,
    f: &Hypergraph,
    steps: &[Vertex],
) -> Result<Option<Extraction>> {
    require_same_uniformity(h, f)?;
    let vf = f.vertex_count();
    if vf == 0 {
        return Err(Error::invalid("F must have at least one vertex"));
    }
    for (i, &v) in steps.iter().enumerate() {
        let size = vf + i * (vf - 1);
        if v >= size {
            return Err(Error::invalid(format!(
                "step {i}: vertex {v} is not in the current target ({size} vertices)"
            )));
        }
    }

    let Some(map) = MapSearch::embeddings(f, h).first() else {
        return Ok(None);
    };
    let mut target = f.clone();
    let mut embedding = Embedding { map };
    for &v in steps {
        let Some(rich) = richest_extension(h, &target, v, vf)? else {
            return Ok(None);
        };
        let Some(inner) = MapSearch::embeddings(f, h).within(&rich.extenders).first() else {
            return Ok(None);
        };
        let old_n = target.vertex_count();
        let next = target.blowup_with(v, f)?;
        let mut map = vec![usize::MAX; next.vertex_count()];
        for (x, b) in rich.base.iter().enumerate() {
            if let Some(u) = b {
                map[x] = *u;
            }
        }
        map[v] = inner[0];
        for i in 1..vf {
            map[old_n + i - 1] = inner[i];
        }
        embedding = Embedding { map };
        target = next;
        if !embedding.is_valid(&target, h) {
            return Err(Error::Internal("extracted map is not an embedding".into()));
        }
    }
    Ok(Some(Extraction {
        steps: steps.to_vec(),
        target,
        embedding,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::contains_copy;

    fn k(r: usize, s: usize) -> Hypergraph {
        Hypergraph::complete(r, s).unwrap()
    }

    #[test]
    fn complete_host_extends_by_every_spare_vertex() {
        let rich = richest_extension(&k(3, 10), &k(3, 3), 1, 7)
            .unwrap()
            .unwrap();
        assert_eq!(rich.extenders.len(), 8);
        for &u in &rich.extenders {
            assert!(rich.embedding_with(u).is_valid(&k(3, 3), &k(3, 10)));
        }
        assert!(richest_extension(&k(3, 10), &k(3, 3), 1, 9)
            .unwrap()
            .is_none());
    }

    #[test]
    fn edgeless_host_has_no_extension() {
        let h = Hypergraph::empty(3, 8).unwrap();
        assert!(richest_extension(&h, &k(3, 3), 0, 1).unwrap().is_none());
        assert!(richest_extension(&h, &k(3, 3), 3, 1).is_err());
    }

    #[test]
    fn figure_one_copy_from_complete_host() {
        let host = k(3, 12);
        let out = extract_blowup_copy(&host, &k(3, 3), &[0]).unwrap().unwrap();
        let fig = k(3, 3).blowup_with(0, &k(3, 3)).unwrap();
        assert_eq!(out.target, fig);
        assert!(out.embedding.is_valid(&fig, &host));
        assert!(contains_copy(&host, &fig).unwrap().is_some());
    }

    #[test]
    fn two_steps_and_failures() {
        let host = k(3, 12);
        let out = extract_blowup_copy(&host, &k(3, 3), &[0, 4])
            .unwrap()
            .unwrap();
        assert_eq!(out.target.vertex_count(), 7);
        assert!(out.embedding.is_valid(&out.target, &host));

        let empty = Hypergraph::empty(3, 12).unwrap();
        assert!(extract_blowup_copy(&empty, &k(3, 3), &[])
            .unwrap()
            .is_none());
        assert!(extract_blowup_copy(&host, &k(3, 3), &[5]).is_err());
        // Base copy only.
        let base = extract_blowup_copy(&k(3, 4), &k(3, 3), &[])
            .unwrap()
            .unwrap();
        assert_eq!(base.target, k(3, 3));
        // Too few spare vertices for the copy of F among extenders.
        assert!(extract_blowup_copy(&k(3, 4), &k(3, 3), &[0])
            .unwrap()
            .is_none());
    }
}
