//! Integer polymatroids given by explicit rank tables.
//!
//! A [`RankTable`] stores `f(I)` for every subset `I` of the ground set. Once
//! it passes [`Polymatroid::new`] the table is normalized, monotone and
//! submodular, and the polymatroid is the set of nonnegative integer vectors
//! `a` with `a(I) <= f(I)` for all `I` and `a(E) = f(E)`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Deref, RangeInclusive};

use serde::Serialize;
use thiserror::Error;

use crate::subset::Subset;

/// Hard cap on the ground set; a table holds `2^n` values.
pub const HARD_MAX_GROUND: usize = 24;

/// Default cap used by front ends and the command line.
pub const DEFAULT_MAX_GROUND: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("ground set must contain at least one element")]
    EmptyGroundSet,
    #[error("ground set of size {n} exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("rank table for n = {n} needs {expected} entries, got {got}")]
    TableSize {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("normalization fails: f(∅) = {value}")]
    Normalization { value: i64 },
    #[error("monotonicity fails: f({smaller}) = {smaller_rank} > f({larger}) = {larger_rank}")]
    Monotonicity {
        smaller: Subset,
        larger: Subset,
        smaller_rank: i64,
        larger_rank: i64,
    },
    #[error(
        "submodularity fails at I = {base}, i = {}, j = {}: f(I+i) + f(I+j) < f(I+i+j) + f(I)",
        .i + 1,
        .j + 1
    )]
    Submodularity { base: Subset, i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolymatroidError {
    #[error("vector has length {got}, ground set has {expected} elements")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("element {} is outside the ground set of size {n}", .element + 1)]
    ElementOutOfRange { element: usize, n: usize },
    #[error("cannot remove an element from a ground set of size {n}")]
    GroundSetTooSmall { n: usize },
    #[error("slice index {j} for element {} lies outside {lower}..={upper}", .element + 1)]
    SliceOutOfRange {
        element: usize,
        j: i64,
        lower: i64,
        upper: i64,
    },
    #[error("not a permutation of the ground set")]
    NotAPermutation,
}

/// Rank values for every subset of `{0, .., n-1}`, indexed by bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankTable {
    n: usize,
    values: Vec<i64>,
}

impl RankTable {
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self, ValidationError> {
        if n == 0 {
            return Err(ValidationError::EmptyGroundSet);
        }
        if n > HARD_MAX_GROUND {
            return Err(ValidationError::TooLarge {
                n,
                limit: HARD_MAX_GROUND,
            });
        }
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(ValidationError::TableSize {
                n,
                expected,
                got: values.len(),
            });
        }
        Ok(RankTable { n, values })
    }

    pub fn from_fn(n: usize, f: impl FnMut(Subset) -> i64) -> Result<Self, ValidationError> {
        if n == 0 {
            return Err(ValidationError::EmptyGroundSet);
        }
        if n > HARD_MAX_GROUND {
            return Err(ValidationError::TooLarge {
                n,
                limit: HARD_MAX_GROUND,
            });
        }
        RankTable::new(n, Subset::all(n).map(f).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, s: Subset) -> i64 {
        self.values[s.index()]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Checks the three rank axioms and returns the first violation found.
    ///
    /// Monotonicity is checked on covering pairs `I ⊂ I+e`, submodularity on
    /// the local exchange form `f(I+i) + f(I+j) >= f(I+i+j) + f(I)`; both are
    /// equivalent to the global axioms.
    pub fn check_axioms(&self) -> Result<(), ValidationError> {
        let n = self.n;
        let empty = self.get(Subset::EMPTY);
        if empty != 0 {
            return Err(ValidationError::Normalization { value: empty });
        }
        for s in Subset::all(n) {
            let fs = self.get(s);
            for e in s.complement(n).elements() {
                let larger = s.with(e);
                let fl = self.get(larger);
                if fs > fl {
                    return Err(ValidationError::Monotonicity {
                        smaller: s,
                        larger,
                        smaller_rank: fs,
                        larger_rank: fl,
                    });
                }
            }
        }
        for s in Subset::all(n) {
            let fs = self.get(s);
            let outside: Vec<usize> = s.complement(n).elements().collect();
            for (a, &i) in outside.iter().enumerate() {
                let fi = self.get(s.with(i));
                for &j in &outside[a + 1..] {
                    if fi + self.get(s.with(j)) < self.get(s.with(i).with(j)) + fs {
                        return Err(ValidationError::Submodularity { base: s, i, j });
                    }
                }
            }
        }
        Ok(())
    }
}

/// A nonnegative integer vector; a lattice point of the base polytope when it
/// comes out of [`Polymatroid::bases`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BasisVector(Vec<i64>);

impl BasisVector {
    pub fn new(coords: Vec<i64>) -> Self {
        BasisVector(coords)
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }
}

impl Deref for BasisVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for BasisVector {
    fn from(v: Vec<i64>) -> Self {
        BasisVector(v)
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A validated integer polymatroid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polymatroid {
    table: RankTable,
    lower: Vec<i64>,
    upper: Vec<i64>,
}

impl Polymatroid {
    pub fn new(table: RankTable) -> Result<Self, ValidationError> {
        table.check_axioms()?;
        Ok(Polymatroid::from_valid_table(table))
    }

    pub fn from_fn(n: usize, f: impl FnMut(Subset) -> i64) -> Result<Self, ValidationError> {
        Polymatroid::new(RankTable::from_fn(n, f)?)
    }

    /// Wraps a table that is known to satisfy the axioms.
    fn from_valid_table(table: RankTable) -> Self {
        debug_assert_eq!(table.check_axioms(), Ok(()));
        let n = table.n;
        let full = Subset::full(n);
        let total = table.get(full);
        let lower = (0..n).map(|t| total - table.get(full.without(t))).collect();
        let upper = (0..n).map(|t| table.get(Subset::singleton(t))).collect();
        Polymatroid {
            table,
            lower,
            upper,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.table.n
    }

    #[inline]
    pub fn rank(&self, s: Subset) -> i64 {
        self.table.get(s)
    }

    pub fn table(&self) -> &RankTable {
        &self.table
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n())
    }

    /// `f(E)`.
    pub fn total_rank(&self) -> i64 {
        self.rank(self.ground())
    }

    /// `f({t})`.
    pub fn singleton_rank(&self, t: usize) -> i64 {
        self.rank(Subset::singleton(t))
    }

    /// Smallest value of coordinate `t` over all bases: `f(E) - f(E - t)`.
    pub fn lower_bound(&self, t: usize) -> i64 {
        self.lower[t]
    }

    /// Largest value of coordinate `t` over all bases: `f({t})`.
    pub fn upper_bound(&self, t: usize) -> i64 {
        self.upper[t]
    }

    /// The values coordinate `t` takes across the bases.
    pub fn slice_range(&self, t: usize) -> RangeInclusive<i64> {
        self.lower[t]..=self.upper[t]
    }

    /// `Σ_i f({i}) - f(E)`, the total rank of the dual.
    pub fn dual_total_rank(&self) -> i64 {
        self.upper.iter().sum::<i64>() - self.total_rank()
    }

    fn check_element(&self, t: usize) -> Result<(), PolymatroidError> {
        if t >= self.n() {
            return Err(PolymatroidError::ElementOutOfRange {
                element: t,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Whether `v` is a basis: nonnegative, `v(I) <= f(I)` for all `I`, and
    /// `v(E) = f(E)`.
    pub fn is_member(&self, v: &[i64]) -> Result<bool, PolymatroidError> {
        let n = self.n();
        if v.len() != n {
            return Err(PolymatroidError::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
        if v.iter().any(|&x| x < 0) {
            return Ok(false);
        }
        if v.iter().sum::<i64>() != self.total_rank() {
            return Ok(false);
        }
        // subset sums by peeling off the lowest element
        let mut sums = vec![0i64; 1 << n];
        for mask in 1..sums.len() {
            let low = mask.trailing_zeros() as usize;
            sums[mask] = sums[mask & (mask - 1)] + v[low];
            if sums[mask] > self.table.values[mask] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All bases in lexicographic order.
    ///
    /// Coordinates are fixed left to right. A prefix `x` on `A = {0, .., t}`
    /// is kept only if `f(E) - f(E - S) <= x(S) <= f(S)` for every `S ⊆ A`
    /// containing `t`; these are exactly the prefixes that extend to a basis,
    /// so the search never backtracks out of a dead branch.
    pub fn bases(&self) -> Vec<BasisVector> {
        let n = self.n();
        let mut out = Vec::new();
        let mut prefix = vec![0i64; n];
        let mut sums = vec![0i64; 1 << n];
        self.extend_prefix(0, &mut prefix, &mut sums, &mut out);
        out
    }

    fn extend_prefix(
        &self,
        t: usize,
        prefix: &mut Vec<i64>,
        sums: &mut [i64],
        out: &mut Vec<BasisVector>,
    ) {
        let n = self.n();
        if t == n {
            out.push(BasisVector(prefix.clone()));
            return;
        }
        let total = self.total_rank();
        let earlier = 1usize << t;
        let bit = 1usize << t;
        'values: for v in self.slice_range(t) {
            for s in 0..earlier {
                let with_t = s | bit;
                let x = sums[s] + v;
                let upper = self.table.values[with_t];
                let lower = total - self.rank(Subset::from_bits(with_t as u32).complement(n));
                if x > upper || x < lower {
                    continue 'values;
                }
                sums[with_t] = x;
            }
            prefix[t] = v;
            self.extend_prefix(t + 1, prefix, sums, out);
        }
    }

    /// The greedy basis `a_t = f({0..t}) - f({0..t-1})`.
    pub fn greedy_basis(&self) -> BasisVector {
        let mut prev = 0;
        let mut acc = Subset::EMPTY;
        let coords = (0..self.n())
            .map(|t| {
                acc = acc.with(t);
                let r = self.rank(acc);
                let a = r - prev;
                prev = r;
                a
            })
            .collect();
        BasisVector(coords)
    }

    /// The dual polymatroid with rank `f*(I) = f(E - I) - f(E) + Σ_{i∈I} f({i})`.
    pub fn dual(&self) -> Polymatroid {
        let n = self.n();
        let total = self.total_rank();
        let table = RankTable::from_fn(n, |s| {
            let singles: i64 = s.elements().map(|i| self.upper[i]).sum();
            self.rank(s.complement(n)) - total + singles
        })
        .expect("dual table has the same shape");
        Polymatroid::from_valid_table(table)
    }

    /// Builds the polymatroid on `E - t` with rank `I ↦ g(I, I+t)`, where
    /// subsets of the smaller ground set are re-indexed by closing the gap
    /// left by `t`.
    fn minor(
        &self,
        t: usize,
        rank: impl Fn(i64, i64) -> i64,
    ) -> Result<Polymatroid, PolymatroidError> {
        self.check_element(t)?;
        let n = self.n();
        if n < 2 {
            return Err(PolymatroidError::GroundSetTooSmall { n });
        }
        let table = RankTable::from_fn(n - 1, |s| {
            let wide = s.spread_at(t);
            rank(self.rank(wide), self.rank(wide.with(t)))
        })
        .expect("minor of a valid table");
        Ok(Polymatroid::from_valid_table(table))
    }

    /// The projection of `{a ∈ P : a_t = j}` onto `E - t`, with rank
    /// `min{f(I), f(I+t) - j}`.
    pub fn slice(&self, t: usize, j: i64) -> Result<Polymatroid, PolymatroidError> {
        self.check_element(t)?;
        let range = self.slice_range(t);
        if !range.contains(&j) {
            return Err(PolymatroidError::SliceOutOfRange {
                element: t,
                j,
                lower: *range.start(),
                upper: *range.end(),
            });
        }
        self.minor(t, |without, with| without.min(with - j))
    }

    /// Deletion `P \ t`: the restriction of `f` to `E - t`.
    pub fn delete(&self, t: usize) -> Result<Polymatroid, PolymatroidError> {
        self.minor(t, |without, _| without)
    }

    /// Contraction `P / t`: rank `f(I + t) - f({t})`.
    pub fn contract(&self, t: usize) -> Result<Polymatroid, PolymatroidError> {
        self.check_element(t)?;
        let ft = self.singleton_rank(t);
        self.minor(t, |_, with| with - ft)
    }

    /// Relabels the ground set: element `e` becomes `perm[e]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Polymatroid, PolymatroidError> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(PolymatroidError::NotAPermutation);
        }
        for &p in perm {
            if p >= n || seen[p] {
                return Err(PolymatroidError::NotAPermutation);
            }
            seen[p] = true;
        }
        let mut inverse = vec![0; n];
        for (e, &p) in perm.iter().enumerate() {
            inverse[p] = e;
        }
        let table = RankTable::from_fn(n, |s| {
            self.rank(Subset::from_elements(s.elements().map(|e| inverse[e])))
        })
        .expect("same shape");
        Ok(Polymatroid::from_valid_table(table))
    }

    /// The basis set as an explicit point set.
    pub fn basis_set(&self) -> LatticeSet {
        LatticeSet::new(
            self.n(),
            self.bases().into_iter().map(BasisVector::into_inner),
        )
    }
}

/// A finite set of integer points, used for translated and reflected copies
/// of a polymatroid that may leave the nonnegative orthant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSet {
    dim: usize,
    points: BTreeSet<Vec<i64>>,
}

impl LatticeSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let points: BTreeSet<_> = points.into_iter().collect();
        assert!(
            points.iter().all(|p| p.len() == dim),
            "point dimension mismatch"
        );
        LatticeSet { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.points.contains(v)
    }

    pub fn points(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.points.iter()
    }

    /// `{a + c : a ∈ self}`.
    #[must_use]
    pub fn translate(&self, c: &[i64]) -> LatticeSet {
        assert_eq!(c.len(), self.dim, "shift dimension mismatch");
        LatticeSet::new(
            self.dim,
            self.points
                .iter()
                .map(|p| p.iter().zip(c).map(|(a, b)| a + b).collect()),
        )
    }

    /// `{-a : a ∈ self}`.
    #[must_use]
    pub fn negate(&self) -> LatticeSet {
        LatticeSet::new(
            self.dim,
            self.points.iter().map(|p| p.iter().map(|a| -a).collect()),
        )
    }
}

/// `P + c`.
pub fn translate(p: &Polymatroid, c: &[i64]) -> Result<LatticeSet, PolymatroidError> {
    if c.len() != p.n() {
        return Err(PolymatroidError::DimensionMismatch {
            expected: p.n(),
            got: c.len(),
        });
    }
    Ok(p.basis_set().translate(c))
}
