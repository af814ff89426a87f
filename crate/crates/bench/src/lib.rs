//! Seeded matrix generators for the benchmarks.

use maxplus::{Trop, TropMatrix, TropVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Dense `n x n` matrix with integer entries in `-10..=10`, a tenth of them `-inf`.
pub fn dense(rng: &mut ChaCha8Rng, n: usize) -> TropMatrix {
    TropMatrix::from_fn(n, n, |_, _| {
        if rng.gen_bool(0.1) {
            Trop::NEG_INF
        } else {
            Trop::int(rng.gen_range(-10..=10))
        }
    })
}

/// A matrix of full ultimate rank: a permutation of zeros dominating
/// everything else, hidden by a random diagonal similarity.
pub fn full_ultimate_rank(rng: &mut ChaCha8Rng, n: usize) -> TropMatrix {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    let base = TropMatrix::from_fn(n, n, |i, j| {
        if sigma[i] == j {
            Trop::ZERO
        } else {
            Trop::int(rng.gen_range(-8..=-1))
        }
    });
    let u = TropVector((0..n).map(|_| Trop::int(rng.gen_range(-5..=5))).collect());
    base.conjugate(&u).unwrap()
}

/// `k` generators sharing one full-rank pattern under different similarities,
/// so the decision runs all three conditions.
pub fn generators(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<TropMatrix> {
    let base = full_ultimate_rank(rng, n);
    (0..k)
        .map(|_| {
            let u = TropVector((0..n).map(|_| Trop::int(rng.gen_range(-1..=1))).collect());
            base.conjugate(&u).unwrap()
        })
        .collect()
}
