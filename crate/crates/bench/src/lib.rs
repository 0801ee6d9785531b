//! Fixtures shared by the benchmarks.

use erogers::Hypergraph;

pub fn complete(r: usize, s: usize) -> Hypergraph {
    Hypergraph::complete(r, s).expect("valid clique")
}

/// The 3-graph `abc, bcd, cde, dea`.
pub fn fig2() -> Hypergraph {
    Hypergraph::new(3, 5, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4]]).expect("valid")
}

/// Deterministic pseudo-random r-graph: the r-set with lexicographic rank
/// `i` is an edge when a multiplicative hash of `i` falls below `percent`.
pub fn hashed(r: usize, n: usize, percent: u64, salt: u64) -> Hypergraph {
    let mut edges = Vec::new();
    let mut set: Vec<usize> = (0..r).collect();
    let mut i = 0u64;
    loop {
        let x = (i ^ salt).wrapping_mul(0x9e37_79b9_7f4a_7c15) >> 32;
        if x % 100 < percent {
            edges.push(set.clone());
        }
        i += 1;
        // Next r-subset in lexicographic order.
        let Some(pos) = (0..r).rev().find(|&p| set[p] < n - r + p) else {
            break;
        };
        set[pos] += 1;
        for q in pos + 1..r {
            set[q] = set[q - 1] + 1;
        }
    }
    Hypergraph::new(r, n, edges).expect("valid")
}
