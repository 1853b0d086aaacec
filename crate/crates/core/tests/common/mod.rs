//! Seeded random vector configurations shared by the integration tests.

#![allow(dead_code)]

use ehrhart_core::VectorConfiguration;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_2024;

/// Full-rank configurations with `d <= 3`, `d <= n <= 5` generators and
/// entries in `[-3, 3]`; dimensions cycle 1, 2, 3.
pub fn random_corpus(size: usize, seed: u64) -> Vec<VectorConfiguration> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        let d = 1 + out.len() % 3;
        let n = rng.gen_range(d..=5);
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..d).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let config = VectorConfiguration::new(d, rows).unwrap();
        if config.full_rank() == d {
            out.push(config);
        }
    }
    out
}

/// `h_0 <= .. <= h_k`
pub fn rises_to<T: PartialOrd>(h: &[T], k: usize) -> bool {
    h[..=k].windows(2).all(|w| w[0] <= w[1])
}

/// `h_k >= .. >= h_last`
pub fn falls_from<T: PartialOrd>(h: &[T], k: usize) -> bool {
    h[k..].windows(2).all(|w| w[0] >= w[1])
}

/// Shape of an h*-vector of degree `d` for a `d`-dimensional zonotope:
/// increasing up to the middle and decreasing after it.
pub fn peaks_in_middle<T: PartialOrd>(h: &[T]) -> bool {
    let d = h.len() - 1;
    if d % 2 == 0 {
        rises_to(h, d / 2) && falls_from(h, d / 2)
    } else {
        rises_to(h, (d - 1) / 2) && falls_from(h, (d + 1) / 2)
    }
}
