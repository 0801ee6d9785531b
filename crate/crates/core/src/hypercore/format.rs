//! The `.hg` text format.
//!
//! ```text
//! # optional comments
//! r n
//! v1 v2 ... vr
//! ```
//!
//! The first non-empty, non-comment line is the header; every further one is
//! an edge. A stream holds several hypergraphs separated by blank lines.

use super::{Hypergraph, Vertex};
use crate::error::{Error, Result};

pub fn parse_hg(text: &str) -> Result<Hypergraph> {
    parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

fn parse_lines<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Hypergraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(usize, Vec<Vertex>)> = Vec::new();
    for (lineno, raw) in lines {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| {
                    Error::parse(lineno, format!("`{tok}` is not a non-negative integer"))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        match header {
            None => {
                let [r, n] = nums[..] else {
                    return Err(Error::parse(lineno, "header must be `r n`"));
                };
                if r == 0 {
                    return Err(Error::parse(lineno, "uniformity must be at least 1"));
                }
                header = Some((r, n, lineno));
            }
            Some((r, _, _)) => {
                if nums.len() != r {
                    return Err(Error::parse(
                        lineno,
                        format!("edge has {} vertices, expected {r}", nums.len()),
                    ));
                }
                edges.push((lineno, nums));
            }
        }
    }
    let Some((r, n, header_line)) = header else {
        return Err(Error::parse(1, "missing `r n` header"));
    };
    let mut seen = std::collections::BTreeSet::new();
    for (lineno, e) in &edges {
        let mut sorted = e.clone();
        sorted.sort_unstable();
        if let Err(Error::InvalidParameter(msg)) = Hypergraph::new(r, n, [&sorted]) {
            return Err(Error::parse(*lineno, msg));
        }
        if !seen.insert(sorted) {
            return Err(Error::parse(*lineno, "duplicate edge"));
        }
    }
    Hypergraph::new(r, n, edges.iter().map(|(_, e)| e))
        .map_err(|e| Error::parse(header_line, e.to_string()))
}

pub fn write_hg(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.uniformity(), h.vertex_count());
    for e in h.edges() {
        let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

/// Hypergraphs separated by one blank line each.
pub fn write_hg_stream<'a>(graphs: impl IntoIterator<Item = &'a Hypergraph>) -> String {
    graphs
        .into_iter()
        .map(write_hg)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn parse_hg_stream(text: &str) -> Result<Vec<Hypergraph>> {
    let mut out = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if block.iter().any(|(_, l)| !l.trim_start().starts_with('#')) {
                out.push(parse_lines(block.drain(..))?);
            }
            block.clear();
        } else {
            block.push((i + 1, line));
        }
    }
    if block.iter().any(|(_, l)| !l.trim_start().starts_with('#')) {
        out.push(parse_lines(block.into_iter())?);
    }
    Ok(out)
}
