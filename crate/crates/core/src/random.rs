//! Random small polymatroids built from coverage functions, truncations and
//! sums, all of which preserve the rank axioms.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::polymatroid::Polymatroid;
use crate::subset::Subset;

const UNIVERSE: usize = 6;

/// `I ↦ |⋃_{i∈I} cover(i)|` for random covers of size at most `max_cover`.
fn coverage(rng: &mut impl Rng, n: usize, max_cover: usize) -> Vec<Subset> {
    (0..n)
        .map(|_| {
            let size = rng.gen_range(0..=max_cover);
            let mut s = Subset::EMPTY;
            while s.len() < size {
                s = s.with(rng.gen_range(0..UNIVERSE));
            }
            s
        })
        .collect()
}

fn covered(covers: &[Subset], s: Subset) -> i64 {
    s.elements()
        .fold(Subset::EMPTY, |acc, i| acc.union(covers[i]))
        .len() as i64
}

/// A random polymatroid on `1..=max_n` elements with every singleton rank at
/// most `max_singleton`.
pub fn random_polymatroid(rng: &mut impl Rng, max_n: usize, max_singleton: i64) -> Polymatroid {
    let max_singleton = max_singleton.max(0) as usize;
    loop {
        let n = rng.gen_range(1..=max_n.max(1));
        let shape = rng.gen_range(0..3);
        let first = coverage(rng, n, max_singleton.min(UNIVERSE));
        let second = coverage(rng, n, 1);
        let cap = rng.gen_range(1..=(n * max_singleton).max(1)) as i64;
        let rank = |s: Subset| match shape {
            0 => covered(&first, s),
            1 => covered(&first, s).min(cap),
            _ => covered(&first, s).min(cap) + covered(&second, s),
        };
        let p = Polymatroid::from_fn(n, rank).expect("coverage ranks satisfy the axioms");
        if (0..n).all(|t| p.singleton_rank(t) <= max_singleton as i64) {
            return p;
        }
    }
}

/// A reproducible list of `count` random polymatroids.
pub fn corpus(seed: u64, count: usize, max_n: usize, max_singleton: i64) -> Vec<Polymatroid> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_polymatroid(&mut rng, max_n, max_singleton))
        .collect()
}
