//! Monte-Carlo estimate of how often a random w-subset spans a copy of F.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rng::{StreamKind, Substream};
use crate::error::{Error, Result};
use crate::hypercore::{binomial, require_same_uniformity, Hypergraph, MapSearch, Vertex};
use crate::rational::Rational;

/// Exhaustive mode is refused above this many w-subsets.
pub const EXHAUSTIVE_COVER_LIMIT: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverEstimate {
    pub hits: u64,
    pub trials: u64,
    pub fraction: Rational,
    /// Normal-approximation 95% half-width; zero in exhaustive mode.
    pub half_width: f64,
    pub exhaustive: bool,
}

fn spans_copy(h: &Hypergraph, f: &Hypergraph, subset: &[Vertex]) -> bool {
    MapSearch::embeddings(f, h).within(subset).exists()
}

fn check(h: &Hypergraph, f: &Hypergraph, w: usize) -> Result<()> {
    require_same_uniformity(h, f)?;
    if w > h.vertex_count() {
        return Err(Error::invalid(format!(
            "w = {w} exceeds the {} vertices of H",
            h.vertex_count()
        )));
    }
    Ok(())
}

/// Samples `trials` uniform w-subsets; trial `i` draws from its own substream.
pub fn estimate_f_cover(
    h: &Hypergraph,
    f: &Hypergraph,
    w: usize,
    trials: u64,
    seed: u64,
) -> Result<CoverEstimate> {
    check(h, f, w)?;
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    let n = h.vertex_count();
    let hits = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let mut s = Substream::new(seed, StreamKind::CoverTrial, t);
            let mut pool: Vec<Vertex> = (0..n).collect();
            for i in 0..w {
                let j = i + s.below((n - i) as u64) as usize;
                pool.swap(i, j);
            }
            spans_copy(h, f, &pool[..w])
        })
        .count() as u64;
    let p = hits as f64 / trials as f64;
    Ok(CoverEstimate {
        hits,
        trials,
        fraction: Rational::new(hits as i64, trials as i64),
        half_width: 1.96 * (p * (1.0 - p) / trials as f64).sqrt(),
        exhaustive: false,
    })
}

/// Checks every w-subset; refused above [`EXHAUSTIVE_COVER_LIMIT`] subsets.
pub fn estimate_f_cover_exhaustive(
    h: &Hypergraph,
    f: &Hypergraph,
    w: usize,
) -> Result<CoverEstimate> {
    check(h, f, w)?;
    let total = binomial(h.vertex_count(), w);
    if total > EXHAUSTIVE_COVER_LIMIT {
        return Err(Error::Capacity {
            what: "number of w-subsets for exhaustive coverage",
            got: total.min(usize::MAX as u128) as usize,
            limit: EXHAUSTIVE_COVER_LIMIT as usize,
        });
    }
    let subsets: Vec<Vec<Vertex>> = (0..h.vertex_count()).combinations(w).collect();
    let hits = subsets.par_iter().filter(|s| spans_copy(h, f, s)).count() as u64;
    let trials = subsets.len() as u64;
    Ok(CoverEstimate {
        hits,
        trials,
        fraction: Rational::new(hits as i64, trials as i64),
        half_width: 0.0,
        exhaustive: true,
    })
}
