//! Wall-clock scaling of the conjugacy decision.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::conjugacy::conjugate_in_raag;
use crate::graph::DefiningGraph;
use crate::random::random_reduced_word;
use crate::word::Word;

pub const DEFAULT_SIZES: [usize; 5] = [10_000, 20_000, 40_000, 80_000, 160_000];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    /// Total length of the input pair.
    pub n: usize,
    pub seconds: f64,
    pub seconds_per_letter: f64,
}

/// A conjugate pair of total length `n`: a random reduced word and one of
/// its rotations, so the decision runs every stage including matching.
pub fn conjugate_pair(g: &DefiningGraph, n: usize, seed: u64) -> (Word, Word) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = random_reduced_word(g, n / 2, &mut rng);
    let v = w.rotate_left(w.len() / 3);
    (w, v)
}

pub fn median(mut xs: Vec<f64>) -> f64 {
    assert!(!xs.is_empty(), "median of nothing");
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    }
}

/// Median seconds of `conjugate_in_raag(w, v)` over `reps` timed runs,
/// after one untimed warmup.
pub fn time_pair(g: &DefiningGraph, w: &Word, v: &Word, reps: usize) -> f64 {
    assert!(conjugate_in_raag(g, w, v), "benchmark pairs are conjugate");
    let runs = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(conjugate_in_raag(g, w, v));
            start.elapsed().as_secs_f64()
        })
        .collect();
    median(runs)
}

pub fn run(g: &DefiningGraph, sizes: &[usize], reps: usize, seed: u64) -> Vec<BenchRow> {
    sizes
        .iter()
        .map(|&n| {
            let (w, v) = conjugate_pair(g, n, seed ^ n as u64);
            let seconds = time_pair(g, &w, &v, reps);
            BenchRow {
                n,
                seconds,
                seconds_per_letter: seconds / n.max(1) as f64,
            }
        })
        .collect()
}

/// `t(n_{k+1}) / t(n_k)` for consecutive rows.
pub fn ratios(rows: &[BenchRow]) -> Vec<f64> {
    rows.windows(2)
        .map(|p| p[1].seconds / p[0].seconds)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn medians() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn small_run() {
        let g = DefiningGraph::free("a", 3);
        let rows = run(&g, &[100, 200], 3, 1);
        assert_eq!(rows.len(), 2);
        assert_eq!(ratios(&rows).len(), 1);
        assert!(rows.iter().all(|r| r.seconds >= 0.0));
    }
}
