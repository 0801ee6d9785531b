//! Seeded random G-free constructions with certificates, plus the tools
//! around them: a G-freeness verifier, a coverage estimator and the
//! supersaturation extraction pipeline.
//!
//! Both constructions are deterministic functions of their inputs and the
//! seed; see [`rng`] for the randomness contract.

mod coloring;
mod cover;
mod extraction;
mod labeling;
pub mod rng;

pub use coloring::{construct_coloring, PairColoring};
pub use cover::{
    estimate_f_cover, estimate_f_cover_exhaustive, CoverEstimate, EXHAUSTIVE_COVER_LIMIT,
};
pub use extraction::{extract_blowup_copy, richest_extension, Extraction, RichExtension};
pub use labeling::{construct_shadow_labeling, Label, ShadowLabeling};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::{contains_copy, Embedding, Hypergraph};
use crate::rational::Rational;

/// Tunable constants: `ell = c1 ln n` colors, window `w = c2 (ln n)^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub c1: Rational,
    pub c2: Rational,
    pub seed: u64,
}

impl Default for ConstructionParams {
    fn default() -> Self {
        ConstructionParams {
            c1: Rational::integer(1),
            c2: Rational::integer(1),
            seed: 0,
        }
    }
}

impl ConstructionParams {
    pub fn with_seed(seed: u64) -> Self {
        ConstructionParams {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.c1.is_positive() || !self.c2.is_positive() {
            return Err(Error::invalid(format!(
                "c1 and c2 must be positive, got c1 = {}, c2 = {}",
                self.c1, self.c2
            )));
        }
        Ok(())
    }

    /// `max(1, round(c1 ln n))`.
    pub fn colors(&self, n: usize) -> usize {
        let ell = (self.c1.to_f64() * (n.max(1) as f64).ln()).round();
        (ell as usize).max(1)
    }

    /// `max(1, round(c2 (ln n)^exponent))`, capped at `n`.
    pub fn window(&self, n: usize, exponent: f64) -> usize {
        let w = (self.c2.to_f64() * (n.max(1) as f64).ln().powf(exponent)).round();
        (w as usize).clamp(1, n.max(1))
    }
}

/// A copy of `g` in `h`, if any; `None` certifies `h` is G-free.
pub fn verify_g_free(h: &Hypergraph, g: &Hypergraph) -> Result<Option<Embedding>> {
    contains_copy(h, g)
}

/// Lexicographic rank of a sorted k-subset of `0..n`.
pub(crate) fn lex_rank(set: &[usize], n: usize) -> u64 {
    use crate::hypercore::binomial;
    let k = set.len();
    let total = binomial(n, k);
    let tail: u128 = set
        .iter()
        .enumerate()
        .map(|(i, &s)| binomial(n - 1 - s, k - i))
        .sum();
    (total - 1 - tail) as u64
}
