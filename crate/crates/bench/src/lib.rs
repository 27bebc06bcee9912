//! Input generators shared by the criterion benches.

use bgposet::oracle::SplitMix64;
use bgposet::{enumerate_bg, LengthVector, Permutation};

/// Deterministic sample of bigrassmannian element pairs of order `n`.
pub fn random_bg_pairs(n: usize, count: usize, seed: u64) -> Vec<(LengthVector, LengthVector)> {
    let all = enumerate_bg(n).expect("valid order");
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| (all[rng.below(all.len())], all[rng.below(all.len())]))
        .collect()
}

/// Deterministic sample of permutation words of order `n`.
pub fn random_words(n: usize, count: usize, seed: u64) -> Vec<Permutation> {
    let mut rng = SplitMix64::new(seed);
    (0..count).map(|_| rng.permutation(n)).collect()
}
