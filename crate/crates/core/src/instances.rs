//! Small named polymatroids used in documentation, tests and the CLI.

use crate::polymatroid::Polymatroid;
use crate::subset::Subset;

/// Five-element polymatroid of total rank 3 with hyperplane-like flats
/// `{1,2,3}` and `{4,5}`.
///
/// `f({1}) = f({3}) = 1`; `f` is 2 on `{2}`, `{4}`, `{5}`, `{1,2}`, `{1,3}`,
/// `{2,3}`, `{4,5}` and `{1,2,3}`; every other nonempty set has rank 3.
pub fn five_element() -> Polymatroid {
    let rank_two: Vec<Subset> = [
        &[2][..],
        &[4],
        &[5],
        &[1, 2],
        &[1, 3],
        &[2, 3],
        &[4, 5],
        &[1, 2, 3],
    ]
    .iter()
    .map(|l| Subset::from_labels(l))
    .collect();
    let rank_one = [Subset::from_labels(&[1]), Subset::from_labels(&[3])];
    Polymatroid::from_fn(5, |s| {
        if s.is_empty() {
            0
        } else if rank_one.contains(&s) {
            1
        } else if rank_two.contains(&s) {
            2
        } else {
            3
        }
    })
    .expect("valid rank table")
}

/// Rank function `min(|I|, k)` of the uniform matroid `U_{k,n}`.
pub fn uniform(k: usize, n: usize) -> Polymatroid {
    Polymatroid::from_fn(n, |s| s.len().min(k) as i64).expect("uniform matroid rank")
}
