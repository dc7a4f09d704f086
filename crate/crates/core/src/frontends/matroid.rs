//! Matroids given by explicit base lists.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::tutte::tutte_oracle;
use super::{check_size, FrontendError, DEFAULT_MAX_EDGES};
use crate::activity::activity_polynomials;
use crate::poly::CoeffPolynomial;
use crate::polymatroid::Polymatroid;
use crate::structure::{circuit_sets, hyperplane_sets, thresholds};
use crate::subset::{Subset, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidModel {
    n: usize,
    bases: Vec<Subset>,
}

impl MatroidModel {
    /// Validates sizes, duplicates and the base-exchange axiom. Bases are
    /// stored sorted.
    pub fn new(n: usize, mut bases: Vec<Subset>) -> Result<Self, FrontendError> {
        check_size("ground set", n, MAX_ELEMENTS)?;
        let Some(&first) = bases.first() else {
            return Err(FrontendError::NoBases);
        };
        for &b in &bases {
            if let Some(e) = b.elements().find(|&e| e >= n) {
                return Err(FrontendError::ElementOutOfRange { element: e, n });
            }
            if b.len() != first.len() {
                return Err(FrontendError::BaseSizeMismatch { first, second: b });
            }
        }
        let mut seen = BTreeSet::new();
        for &b in &bases {
            if !seen.insert(b) {
                return Err(FrontendError::DuplicateBase(b));
            }
        }
        for &b1 in &bases {
            for &b2 in &bases {
                for x in b1.difference(b2).elements() {
                    let ok = b2
                        .difference(b1)
                        .elements()
                        .any(|y| seen.contains(&b1.without(x).with(y)));
                    if !ok {
                        return Err(FrontendError::BaseExchange {
                            first: b1,
                            second: b2,
                            element: x,
                        });
                    }
                }
            }
        }
        bases.sort();
        Ok(MatroidModel { n, bases })
    }

    /// Skips validation, for base lists known to come from a matroid.
    pub(crate) fn from_trusted(n: usize, mut bases: Vec<Subset>) -> Self {
        debug_assert!(!bases.is_empty());
        bases.sort();
        MatroidModel { n, bases }
    }

    /// `U_{k,n}`: every `k`-subset is a base.
    pub fn uniform(k: usize, n: usize) -> Self {
        let bases = Subset::all(n).filter(|s| s.len() == k).collect();
        MatroidModel::new(n, bases).expect("uniform matroid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn total_rank(&self) -> usize {
        self.bases[0].len()
    }

    /// `max_B |B ∩ A|`.
    pub fn rank(&self, a: Subset) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(a).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.bases.iter().any(|&b| a.is_subset_of(b))
    }

    /// Rank of every subset, indexed by bitmask: the independent sets are
    /// the down-closure of the bases, and `r(A) = max(|I| : I ⊆ A)`.
    /// Cost `O(n 2^n)`; callers enforce the size cap.
    pub fn rank_table(&self) -> Vec<usize> {
        let size = 1usize << self.n;
        let mut independent = vec![false; size];
        for b in &self.bases {
            independent[b.index()] = true;
        }
        for s in (0..size).rev() {
            if independent[s] {
                continue;
            }
            independent[s] = (0..self.n).any(|e| s & (1 << e) == 0 && independent[s | (1 << e)]);
        }
        let mut rank = vec![0usize; size];
        for s in 1..size {
            rank[s] = if independent[s] {
                s.count_ones() as usize
            } else {
                (0..self.n)
                    .filter(|&e| s & (1 << e) != 0)
                    .map(|e| rank[s & !(1 << e)])
                    .max()
                    .unwrap_or(0)
            };
        }
        rank
    }

    pub fn loops(&self) -> Subset {
        let union = self
            .bases
            .iter()
            .fold(Subset::EMPTY, |acc, &b| acc.union(b));
        union.complement(self.n)
    }

    pub fn polymatroid(&self, max_n: usize) -> Result<Polymatroid, FrontendError> {
        check_size("ground set", self.n, max_n)?;
        let table = self.rank_table();
        Ok(Polymatroid::from_fn(self.n, |s| table[s.index()] as i64)?)
    }

    /// Indicator vectors of the bases.
    pub fn indicator_vectors(&self) -> BTreeSet<Vec<i64>> {
        self.bases
            .iter()
            .map(|b| (0..self.n).map(|e| i64::from(b.contains(e))).collect())
            .collect()
    }

    /// Minimal dependent sets, keyed by size.
    pub fn circuits(&self) -> BTreeMap<usize, Vec<Subset>> {
        let table = self.rank_table();
        let independent = |s: Subset| table[s.index()] == s.len();
        let mut out: BTreeMap<usize, Vec<Subset>> = BTreeMap::new();
        for s in Subset::all(self.n) {
            if !independent(s) && s.elements().all(|x| independent(s.without(x))) {
                out.entry(s.len()).or_default().push(s);
            }
        }
        out
    }

    /// Hyperplanes as complements of cocircuits (minimal sets meeting every
    /// base), keyed by cocircuit size.
    pub fn hyperplanes(&self) -> BTreeMap<usize, Vec<Subset>> {
        let meets_all = |s: Subset| self.bases.iter().all(|&b| !b.intersection(s).is_empty());
        let mut out: BTreeMap<usize, Vec<Subset>> = BTreeMap::new();
        for s in Subset::all(self.n) {
            if meets_all(s) && s.elements().all(|x| !meets_all(s.without(x))) {
                out.entry(s.len()).or_default().push(s.complement(self.n));
            }
        }
        for v in out.values_mut() {
            v.sort();
        }
        out
    }

    /// `min{|F| : r(E - F) = d - k}`; `None` for `k > d`.
    pub fn f(&self, k: usize) -> Option<usize> {
        let d = self.total_rank();
        let full = Subset::full(self.n);
        let table = self.rank_table();
        Subset::all(self.n)
            .filter(|&s| d.checked_sub(k) == Some(table[full.difference(s).index()]))
            .map(|s| s.len())
            .min()
    }

    /// `min{|F| : r(F) = |F| - k}`; `None` when no set has nullity `k`.
    pub fn f_prime(&self, k: usize) -> Option<usize> {
        let table = self.rank_table();
        Subset::all(self.n)
            .filter(|&s| s.len() == table[s.index()] + k)
            .map(|s| s.len())
            .min()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatroidReport {
    pub n: usize,
    pub rank: usize,
    pub base_count: usize,
    pub interior: CoeffPolynomial,
    pub exterior: CoeffPolynomial,
    /// `T(1, y)` ascending in `y`.
    pub tutte_y_line: Vec<i128>,
    /// `T(x, 1)` ascending in `x`.
    pub tutte_x_line: Vec<i128>,
    pub tutte_at_one: i128,
    pub bases_are_indicators: bool,
    /// `X(y) = y^{n-d} T(1, 1/y)`.
    pub exterior_reversal: bool,
    /// `I(x) = x^d T(1/x, 1)`.
    pub interior_reversal: bool,
    pub hyperplanes_match: bool,
    pub f2_matches: bool,
    /// Circuits and `f'_2` agree with their polymatroid analogues only when
    /// the matroid is loopless; `None` otherwise.
    pub circuits_match: Option<bool>,
    pub f2_prime_matches: Option<bool>,
}

impl MatroidReport {
    pub fn passed(&self) -> bool {
        let counts = self.tutte_at_one == self.base_count as i128
            && self.exterior.eval_one() as usize == self.base_count
            && self.interior.eval_one() as usize == self.base_count;
        counts
            && self.bases_are_indicators
            && self.exterior_reversal
            && self.interior_reversal
            && self.hyperplanes_match
            && self.f2_matches
            && self.circuits_match != Some(false)
            && self.f2_prime_matches != Some(false)
    }
}

/// `[v^k] v^m p(1/v)` for every `k`, i.e. `p` reversed within degree `m`.
fn reversed_within(line: &[i128], m: usize) -> Option<Vec<i128>> {
    if line.len() > m + 1 {
        return None;
    }
    Some(
        (0..=m)
            .map(|k| line.get(m - k).copied().unwrap_or(0))
            .collect(),
    )
}

fn matches(poly: &CoeffPolynomial, expected: Option<Vec<i128>>) -> bool {
    let Some(expected) = expected else {
        return false;
    };
    let width = expected.len().max(poly.coeffs().len());
    (0..width).all(|k| poly.coeff(k) as i128 == expected.get(k).copied().unwrap_or(0))
}

/// Compares the activity polynomials of `P(M)` with the Tutte oracle and the
/// matroid-level structure with its polymatroid counterpart.
pub fn check_matroid_specialization(m: &MatroidModel) -> Result<MatroidReport, FrontendError> {
    let p = m.polymatroid(DEFAULT_MAX_EDGES)?;
    let tutte = tutte_oracle(m)?;
    let (interior, exterior) = activity_polynomials(&p);
    let n = m.n();
    let d = m.total_rank();
    let y_line = tutte.y_line();
    let x_line = tutte.x_line();

    let bases_are_indicators = p
        .bases()
        .into_iter()
        .map(|b| b.into_inner())
        .collect::<BTreeSet<_>>()
        == m.indicator_vectors();

    let poly_hyperplanes: BTreeMap<usize, Vec<Subset>> = hyperplane_sets(&p)
        .into_iter()
        .filter(|(_, v)| !v.is_empty())
        .collect();
    let poly_circuits: BTreeMap<usize, Vec<Subset>> = circuit_sets(&p)
        .into_iter()
        .filter(|(_, v)| !v.is_empty())
        .collect();
    let th = thresholds(&p);
    let loopless = m.loops().is_empty();

    Ok(MatroidReport {
        n,
        rank: d,
        base_count: m.bases().len(),
        exterior_reversal: matches(&exterior, reversed_within(&y_line, n - d)),
        interior_reversal: matches(&interior, reversed_within(&x_line, d)),
        interior,
        exterior,
        tutte_at_one: tutte.eval(1, 1),
        tutte_y_line: y_line,
        tutte_x_line: x_line,
        bases_are_indicators,
        hyperplanes_match: poly_hyperplanes == m.hyperplanes(),
        f2_matches: th.r(2) == m.f(2),
        circuits_match: loopless.then(|| poly_circuits == m.circuits()),
        f2_prime_matches: loopless.then(|| th.r_prime(2) == m.f_prime(2)),
    })
}
