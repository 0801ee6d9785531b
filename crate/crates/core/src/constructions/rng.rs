//! Index-keyed random substreams.
//!
//! Every random object owns a ChaCha8 stream whose 32-byte key is
//! `seed (LE u64) || kind (LE u64) || index (LE u64) || b"erogers\0"`. Draws
//! therefore depend only on the object, never on iteration order or thread
//! count. Bounded integers use rejection sampling on `next_u64`, and
//! shuffles are Fisher–Yates from the last position down.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u64)]
pub enum StreamKind {
    PairColor = 1,
    ColorMap = 2,
    ShadowLabel = 3,
    CoverTrial = 4,
}

pub struct Substream(ChaCha8Rng);

impl Substream {
    pub fn new(seed: u64, kind: StreamKind, index: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&(kind as u64).to_le_bytes());
        key[16..24].copy_from_slice(&index.to_le_bytes());
        key[24..].copy_from_slice(b"erogers\0");
        Substream(ChaCha8Rng::from_seed(key))
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let reject_from = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.0.next_u64();
            if x < reject_from {
                return x % bound;
            }
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn draws(mut s: Substream) -> Vec<u64> {
        (0..8).map(|_| s.below(1000)).collect()
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a = draws(Substream::new(7, StreamKind::PairColor, 3));
        let b = draws(Substream::new(7, StreamKind::PairColor, 3));
        let c = draws(Substream::new(7, StreamKind::PairColor, 4));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn frozen_first_draws() {
        // Pins the generator contract: changing it changes every certificate.
        let mut s = Substream::new(0, StreamKind::PairColor, 0);
        let first: Vec<u64> = (0..4).map(|_| s.below(1 << 20)).collect();
        assert_eq!(first, [348523, 891039, 233051, 749331]);
    }

    #[test]
    fn shuffle_is_a_permutation_and_roughly_uniform() {
        let mut counts = [0usize; 6];
        for i in 0..6000 {
            let mut xs = [0, 1, 2];
            Substream::new(1, StreamKind::ShadowLabel, i).shuffle(&mut xs);
            let mut sorted = xs;
            sorted.sort();
            assert_eq!(sorted, [0, 1, 2]);
            let code = match xs {
                [0, 1, 2] => 0,
                [0, 2, 1] => 1,
                [1, 0, 2] => 2,
                [1, 2, 0] => 3,
                [2, 0, 1] => 4,
                _ => 5,
            };
            counts[code] += 1;
        }
        assert!(
            counts.iter().all(|&c| (850..1150).contains(&c)),
            "{counts:?}"
        );
    }
}
