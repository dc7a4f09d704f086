//! Flats, hyperplane-like and circuit-like sets, rank thresholds, and the
//! closed-form low-order coefficients they determine.
//!
//! With `f(E) = d` and `g = Σ_i f({i}) - d`, the exterior coefficients below
//! `r_2(P)` are
//!
//! ```text
//! [y^i] X_P = C(d+i-1, i) - Σ_{j=0..i} C(d+i-1-j, i-j) |H_j(P)|
//! ```
//!
//! and the interior coefficients below `r'_2(P)` follow the same shape with
//! `g` and `|C_j(P)|`.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::poly::{binomial, CoeffPolynomial};
use crate::polymatroid::Polymatroid;
use crate::subset::Subset;

/// `{e : f(I + e) = f(I)}`.
pub fn closure(p: &Polymatroid, s: Subset) -> Subset {
    let fs = p.rank(s);
    (0..p.n())
        .filter(|&e| p.rank(s.with(e)) == fs)
        .fold(Subset::EMPTY, Subset::with)
}

pub fn is_flat(p: &Polymatroid, s: Subset) -> bool {
    let fs = p.rank(s);
    s.complement(p.n())
        .elements()
        .all(|e| p.rank(s.with(e)) > fs)
}

/// All flats in increasing bitmask order.
pub fn flats(p: &Polymatroid) -> Vec<Subset> {
    Subset::all(p.n()).filter(|&s| is_flat(p, s)).collect()
}

/// `Σ_{i∈S} f({i}) - f(S)`.
pub fn deficiency(p: &Polymatroid, s: Subset) -> i64 {
    s.elements().map(|i| p.singleton_rank(i)).sum::<i64>() - p.rank(s)
}

/// `H_j(P)`: flats of rank `f(E) - 1` whose complement has `j` elements,
/// keyed by `j` for `j = 0..=n`.
pub fn hyperplane_sets(p: &Polymatroid) -> BTreeMap<usize, Vec<Subset>> {
    let n = p.n();
    let target = p.total_rank() - 1;
    let mut out: BTreeMap<usize, Vec<Subset>> = (0..=n).map(|j| (j, Vec::new())).collect();
    for s in Subset::all(n) {
        if p.rank(s) == target && is_flat(p, s) {
            out.get_mut(&(n - s.len())).expect("j <= n").push(s);
        }
    }
    out
}

/// Whether `s` has deficiency one while every `s - x` has deficiency zero.
pub fn is_circuit(p: &Polymatroid, s: Subset) -> bool {
    deficiency(p, s) == 1 && s.elements().all(|x| deficiency(p, s.without(x)) == 0)
}

/// `C_j(P)`, keyed by `j = 0..=n`.
pub fn circuit_sets(p: &Polymatroid) -> BTreeMap<usize, Vec<Subset>> {
    let n = p.n();
    let mut out: BTreeMap<usize, Vec<Subset>> = (0..=n).map(|j| (j, Vec::new())).collect();
    for s in Subset::all(n) {
        if is_circuit(p, s) {
            out.get_mut(&s.len()).expect("|C| <= n").push(s);
        }
    }
    out
}

/// `r_k(P)` for `k = 0..=f(E)` and `r'_k(P)` for `k = 0..=g`; larger `k`
/// have no threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    r: Vec<usize>,
    r_prime: Vec<usize>,
}

impl Thresholds {
    /// `min{n - |F| : f(F) <= f(E) - k}`.
    pub fn r(&self, k: usize) -> Option<usize> {
        self.r.get(k).copied()
    }

    /// `min{|F| : Σ_{i∈F} f({i}) - f(F) >= k}`.
    pub fn r_prime(&self, k: usize) -> Option<usize> {
        self.r_prime.get(k).copied()
    }

    pub fn r_values(&self) -> &[usize] {
        &self.r
    }

    pub fn r_prime_values(&self) -> &[usize] {
        &self.r_prime
    }
}

pub fn thresholds(p: &Polymatroid) -> Thresholds {
    let n = p.n();
    let total = p.total_rank();
    let g = p.dual_total_rank();
    let mut r = vec![usize::MAX; total as usize + 1];
    let mut r_prime = vec![usize::MAX; g as usize + 1];
    for s in Subset::all(n) {
        let drop = (total - p.rank(s)) as usize;
        let cost = n - s.len();
        if cost < r[drop] {
            r[drop] = cost;
        }
        let def = deficiency(p, s) as usize;
        if s.len() < r_prime[def] {
            r_prime[def] = s.len();
        }
    }
    // "at least k": suffix minima
    for v in [&mut r, &mut r_prime] {
        for k in (0..v.len().saturating_sub(1)).rev() {
            v[k] = v[k].min(v[k + 1]);
        }
    }
    debug_assert!(r.iter().chain(&r_prime).all(|&x| x <= n));
    Thresholds { r, r_prime }
}

/// `([y^0] X_P, [y^1] X_P) = (1, Σ_i f(E - i) - (n-1) f(E))`.
pub fn first_coefficients(p: &Polymatroid) -> (i128, i128) {
    let n = p.n();
    let full = p.ground();
    let sum: i128 = (0..n).map(|i| p.rank(full.without(i)) as i128).sum();
    (1, sum - (n as i128 - 1) * p.total_rank() as i128)
}

/// Indices `i` for which a closed-form coefficient is guaranteed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaRange {
    /// `0 <= i < bound`.
    Below(usize),
    /// The threshold at `k = 2` does not exist; the rank (or dual rank) is at
    /// most one and the formula holds for every `i`.
    Unbounded,
}

impl FormulaRange {
    pub fn contains(self, i: usize) -> bool {
        match self {
            FormulaRange::Below(b) => i < b,
            FormulaRange::Unbounded => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("index {i} is outside the guaranteed range {range:?}")]
pub struct FormulaRangeError {
    pub i: usize,
    pub range: FormulaRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Exterior,
    Interior,
}

/// Everything the coefficient formulas read.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub n: usize,
    pub total_rank: i64,
    /// `Σ_i f({i}) - f(E)`.
    pub g: i64,
    pub flats: Vec<Subset>,
    pub hyperplanes: BTreeMap<usize, Vec<Subset>>,
    pub circuits: BTreeMap<usize, Vec<Subset>>,
    pub thresholds: Thresholds,
}

impl StructureSummary {
    pub fn of(p: &Polymatroid) -> Self {
        StructureSummary {
            n: p.n(),
            total_rank: p.total_rank(),
            g: p.dual_total_rank(),
            flats: flats(p),
            hyperplanes: hyperplane_sets(p),
            circuits: circuit_sets(p),
            thresholds: thresholds(p),
        }
    }

    pub fn hyperplane_count(&self, j: usize) -> usize {
        self.hyperplanes.get(&j).map_or(0, Vec::len)
    }

    pub fn circuit_count(&self, j: usize) -> usize {
        self.circuits.get(&j).map_or(0, Vec::len)
    }

    pub fn range(&self, side: Side) -> FormulaRange {
        let bound = match side {
            Side::Exterior => self.thresholds.r(2),
            Side::Interior => self.thresholds.r_prime(2),
        };
        bound.map_or(FormulaRange::Unbounded, FormulaRange::Below)
    }

    /// The closed form evaluated at `i` without range checking.
    pub fn formula(&self, side: Side, i: usize) -> i128 {
        let (base, count): (i64, &dyn Fn(usize) -> usize) = match side {
            Side::Exterior => (self.total_rank, &|j| self.hyperplane_count(j)),
            Side::Interior => (self.g, &|j| self.circuit_count(j)),
        };
        let i = i as i64;
        let mut value = binomial(base + i - 1, i);
        for j in 0..=i {
            value -= binomial(base + i - 1 - j, i - j) * count(j as usize) as i128;
        }
        value
    }

    /// The closed form at `i`, refused outside the guaranteed range.
    pub fn theorem_coefficient(&self, side: Side, i: usize) -> Result<i128, FormulaRangeError> {
        let range = self.range(side);
        if !range.contains(i) {
            return Err(FormulaRangeError { i, range });
        }
        Ok(self.formula(side, i))
    }

    /// Formula against enumeration for `i = 0..=max_i`.
    pub fn formula_table(
        &self,
        side: Side,
        poly: &CoeffPolynomial,
        max_i: usize,
    ) -> Vec<FormulaRow> {
        let range = self.range(side);
        (0..=max_i)
            .map(|i| FormulaRow {
                i,
                formula: self.formula(side, i),
                enumerated: poly.coeff(i) as i128,
                in_range: range.contains(i),
            })
            .collect()
    }
}

pub fn theorem_coefficient_exterior(p: &Polymatroid, i: usize) -> Result<i128, FormulaRangeError> {
    StructureSummary::of(p).theorem_coefficient(Side::Exterior, i)
}

pub fn theorem_coefficient_interior(p: &Polymatroid, i: usize) -> Result<i128, FormulaRangeError> {
    StructureSummary::of(p).theorem_coefficient(Side::Interior, i)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaRow {
    pub i: usize,
    pub formula: i128,
    pub enumerated: i128,
    pub in_range: bool,
}

impl FormulaRow {
    pub fn agrees(&self) -> bool {
        self.formula == self.enumerated
    }
}

/// Both sides of the two binomial-prefix equivalences at one `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialPrefixCheck {
    pub k: usize,
    /// `[y^i] X_P = C(f(E)+i-1, i)` for all `i <= k`.
    pub exterior_prefix: bool,
    /// `f(E - J) = f(E)` for all `|J| = k`.
    pub exterior_rank_condition: bool,
    /// `[x^i] I_P = C(g+i-1, i)` for all `i <= k`.
    pub interior_prefix: bool,
    /// `Σ_{i∈J} f({i}) = f(J)` for all `|J| = k`.
    pub interior_rank_condition: bool,
}

impl BinomialPrefixCheck {
    pub fn holds(&self) -> bool {
        self.exterior_prefix == self.exterior_rank_condition
            && self.interior_prefix == self.interior_rank_condition
    }
}

/// Evaluates both equivalences at `k` from already computed polynomials.
pub fn binomial_prefix_check(
    p: &Polymatroid,
    interior: &CoeffPolynomial,
    exterior: &CoeffPolynomial,
    k: usize,
) -> BinomialPrefixCheck {
    let n = p.n();
    let d = p.total_rank();
    let g = p.dual_total_rank();
    let full = p.ground();
    let exterior_prefix =
        (0..=k).all(|i| exterior.coeff(i) as i128 == binomial(d + i as i64 - 1, i as i64));
    let interior_prefix =
        (0..=k).all(|i| interior.coeff(i) as i128 == binomial(g + i as i64 - 1, i as i64));
    let sized = || Subset::all(n).filter(move |s| s.len() == k);
    BinomialPrefixCheck {
        k,
        exterior_prefix,
        exterior_rank_condition: sized().all(|j| p.rank(full.difference(j)) == d),
        interior_prefix,
        interior_rank_condition: sized().all(|j| deficiency(p, j) == 0),
    }
}

/// `a_i <= a_{i+1}` for `i < k` and `a_i >= a_{i+1}` for `i > k`, for some
/// `k`.
pub fn is_unimodal<T: PartialOrd>(seq: &[T]) -> bool {
    let len = seq.len();
    (0..len.max(1)).any(|k| {
        (0..k.min(len.saturating_sub(1))).all(|i| seq[i] <= seq[i + 1])
            && (k + 1..len.saturating_sub(1)).all(|i| seq[i] >= seq[i + 1])
    })
}

/// The coefficient prefix covered by the guaranteed range; the whole
/// sequence when the range is unbounded.
pub fn guaranteed_prefix(poly: &CoeffPolynomial, range: FormulaRange) -> Vec<u64> {
    match range {
        FormulaRange::Below(b) => (0..b).map(|i| poly.coeff(i)).collect(),
        FormulaRange::Unbounded => poly.coeffs().to_vec(),
    }
}
