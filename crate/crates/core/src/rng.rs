//! Counter-based seeded randomness.
//!
//! The generator is SplitMix64: the state is a 64-bit counter advanced by a
//! fixed odd increment, and every output is the counter passed through a
//! fixed avalanche mixer. All constants live here so that a dataset manifest
//! can record them and any implementation can replay the same stream.

use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kind::PuzzleKind;

/// Counter increment (the 64-bit golden ratio).
pub const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
/// First multiplier of the avalanche mixer.
pub const MIX_MUL_1: u64 = 0xBF58_476D_1CE4_E5B9;
/// Second multiplier of the avalanche mixer.
pub const MIX_MUL_2: u64 = 0x94D0_49BB_1331_11EB;
/// Domain separator folded into per-instance seeds.
pub const SEED_DOMAIN: u64 = 0x7075_7A7A_6C65_6765; // "puzzlege"

/// SplitMix64 finaliser.
#[inline]
pub const fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(MIX_MUL_1);
    z = (z ^ (z >> 27)).wrapping_mul(MIX_MUL_2);
    z ^ (z >> 31)
}

/// Seed of one generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub master: u64,
    pub derived: u64,
}

impl Seed {
    pub fn new(master: u64, kind: PuzzleKind, index: u32) -> Self {
        Seed {
            master,
            derived: derive_seed(master, kind, index),
        }
    }
}

/// Per-instance seed from `(master, kind, index)`.
///
/// The kind and index are packed into one 64-bit word and mixed twice with
/// the master seed, so neighbouring indices and kinds land far apart.
pub fn derive_seed(master: u64, kind: PuzzleKind, index: u32) -> u64 {
    let tag = ((kind.ordinal() as u64 + 1) << 32) | index as u64;
    let a = mix64(master ^ SEED_DOMAIN);
    mix64(a.wrapping_add(mix64(tag.wrapping_mul(GAMMA))))
}

/// One draw from `[lo, hi]`, returning the value and the advanced state.
///
/// Rejection sampling keeps the draw unbiased for every span.
pub fn rng_next(state: u64, lo: i64, hi: i64) -> Result<(i64, u64)> {
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let span = (hi as i128 - lo as i128 + 1) as u128;
    let mut state = state;
    if span > u64::MAX as u128 {
        state = state.wrapping_add(GAMMA);
        return Ok((mix64(state) as i64, state));
    }
    let span = span as u64;
    // Accepting x <= zone leaves a multiple of `span` outcomes.
    let zone = u64::MAX - (u64::MAX % span + 1) % span;
    loop {
        state = state.wrapping_add(GAMMA);
        let x = mix64(state);
        if x <= zone {
            return Ok(((lo as i128 + (x % span) as i128) as i64, state));
        }
    }
}

/// Value-passed random stream over [`rng_next`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    /// Independent stream for a named purpose within one instance.
    pub fn fork(seed: u64, stream: u64) -> Self {
        Rng::new(mix64(seed ^ mix64(stream.wrapping_mul(GAMMA))))
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix64(self.state)
    }

    /// Uniform integer in `[lo, hi]`. Panics if `lo > hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let (v, s) = rng_next(self.state, lo, hi).expect("empty range");
        self.state = s;
        v
    }

    /// Uniform index in `[0, n)`. Panics if `n == 0`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below(0)");
        self.range(0, n as i64 - 1) as usize
    }

    pub fn range_usize(&mut self, lo: usize, hi: usize) -> usize {
        self.range(lo as i64, hi as i64) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// True with probability `num / den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        (self.below(den as usize) as u64) < num
    }

    /// Uniform float in `[0, 1)` with 53 bits of precision.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }

    /// `k` distinct indices from `[0, n)`, in draw order.
    pub fn sample_indices(&mut self, n: usize, k: usize) -> Vec<usize> {
        assert!(k <= n);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.below(n - i);
            pool.swap(i, j);
        }
        pool.truncate(k);
        pool
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_range() {
        let (v, s) = rng_next(42, 3, 3).unwrap();
        assert_eq!(v, 3);
        assert_ne!(s, 42);
    }

    #[test]
    fn deterministic() {
        assert_eq!(rng_next(9, 0, 100).unwrap(), rng_next(9, 0, 100).unwrap());
        assert_eq!(
            derive_seed(1, PuzzleKind::Maze, 0),
            derive_seed(1, PuzzleKind::Maze, 0)
        );
    }

    #[test]
    fn inverted_range_errors() {
        assert_eq!(rng_next(0, 5, 4), Err(Error::InvalidRange { lo: 5, hi: 4 }));
    }

    #[test]
    fn derived_seeds_differ() {
        let m = 0xDEAD_BEEF;
        assert_ne!(
            derive_seed(m, PuzzleKind::BoardTiling, 0),
            derive_seed(m, PuzzleKind::BoardTiling, 1)
        );
        assert_ne!(
            derive_seed(m, PuzzleKind::BoardTiling, 5),
            derive_seed(m, PuzzleKind::Calendar, 5)
        );
    }

    #[test]
    fn no_collisions_across_dataset_grid() {
        let mut all = Vec::new();
        for kind in PuzzleKind::ALL {
            for i in 0..1000 {
                all.push(derive_seed(7, kind, i));
            }
        }
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 18 * 1000);
    }

    #[test]
    fn extreme_ranges() {
        let (v, _) = rng_next(1, i64::MIN, i64::MAX).unwrap();
        let _ = v;
        let (v, _) = rng_next(1, -5, -5).unwrap();
        assert_eq!(v, -5);
    }

    #[test]
    fn bucket_frequencies_within_five_sigma() {
        // 10^6 draws over ten buckets: expected 10^5 each, sigma = sqrt(n p (1-p)).
        let n = 1_000_000u64;
        let mut counts = [0u64; 10];
        let mut s = 12345;
        for _ in 0..n {
            let (v, ns) = rng_next(s, 0, 9).unwrap();
            s = ns;
            counts[v as usize] += 1;
        }
        let sigma = libm::sqrt(n as f64 * 0.1 * 0.9);
        let mut chi2 = 0.0;
        for &c in &counts {
            let d = c as f64 - 100_000.0;
            assert!(libm::fabs(d) < 5.0 * sigma, "bucket {c}");
            chi2 += d * d / 100_000.0;
        }
        // 9 degrees of freedom; 27.88 is the 0.999 quantile.
        assert!(chi2 < 27.88, "chi2 {chi2}");
    }

    #[test]
    fn shuffle_is_permutation() {
        let mut rng = Rng::new(3);
        let mut v: Vec<u32> = (0..50).collect();
        rng.shuffle(&mut v);
        let mut sorted = v.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..50).collect::<Vec<_>>());
    }
}
