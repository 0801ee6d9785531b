//! Uniform hypergraph toolkit for Erdős–Rogers style questions.
//!
//! - [`hypercore`]: r-graphs, shadows, blowups, embedding search, canonical forms.
//! - [`morphisms`]: homomorphisms, k-shadow homomorphisms, tight connectivity,
//!   iterated-blowup membership.
//! - [`exponents`]: the densities α_F and β_F of the 2-shadow as exact rationals.
//! - [`constructions`]: seeded random G-free constructions with certificates,
//!   coverage estimation and supersaturation extraction.
//! - [`exact`]: brute-force ground truth for f_{F,G}(n) on tiny inputs.

pub mod constructions;
pub mod error;
pub mod exact;
pub mod exponents;
pub mod hypercore;
pub mod morphisms;
pub mod rational;

pub use error::{Error, Result};
pub use hypercore::{
    canonical_form, contains_copy, count_embeddings, CanonicalForm, Edge, Embedding, Hypergraph,
    Vertex,
};
pub use rational::Rational;
