//! Hypergraphs, their bipartite incidence graphs, and the hypertree
//! polymatroid of `μ(E') = |⋃E'| - c(E')`.

use std::collections::{BTreeMap, BTreeSet};

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::graph::GraphModel;
use super::{check_size, FrontendError, DEFAULT_MAX_EDGES};
use crate::activity::activity_polynomials;
use crate::poly::{binomial, CoeffPolynomial};
use crate::polymatroid::Polymatroid;
use crate::structure::{circuit_sets, hyperplane_sets, FormulaRow, Side, StructureSummary};
use crate::subset::{Subset, MAX_ELEMENTS};

/// A hypergraph with named vertices; hyperedges form a multiset whose input
/// order fixes the element order of the polymatroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphModel {
    names: Vec<String>,
    hyperedges: Vec<Subset>,
}

impl HypergraphModel {
    pub fn new(names: Vec<String>, hyperedges: Vec<Subset>) -> Result<Self, FrontendError> {
        if names.is_empty() {
            return Err(FrontendError::NoVertices);
        }
        check_size("vertex set", names.len(), MAX_ELEMENTS)?;
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name) {
                return Err(FrontendError::DuplicateVertexName(name.clone()));
            }
        }
        for (h, e) in hyperedges.iter().enumerate() {
            if e.is_empty() {
                return Err(FrontendError::EmptyHyperedge(h));
            }
            if let Some(v) = e.elements().find(|&v| v >= names.len()) {
                return Err(FrontendError::HyperedgeVertexOutOfRange {
                    hyperedge: h,
                    vertex: v,
                    count: names.len(),
                });
            }
        }
        let total: usize = hyperedges.iter().map(|e| e.len()).sum();
        check_size("incidence count", total, MAX_ELEMENTS)?;
        Ok(HypergraphModel { names, hyperedges })
    }

    /// Vertices named `v1, v2, ...`.
    pub fn with_indexed_names(
        vertex_count: usize,
        hyperedges: Vec<Subset>,
    ) -> Result<Self, FrontendError> {
        let names = (1..=vertex_count).map(|i| format!("v{i}")).collect();
        HypergraphModel::new(names, hyperedges)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn hyperedges(&self) -> &[Subset] {
        &self.hyperedges
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    /// `Bip H`: nodes `0..|V|` are vertices, `|V| + h` is hyperedge `h`;
    /// incidences are listed hyperedge by hyperedge.
    pub fn bipartite(&self) -> GraphModel {
        let nv = self.vertex_count();
        let edges = self
            .hyperedges
            .iter()
            .enumerate()
            .flat_map(|(h, e)| e.elements().map(move |v| (v, nv + h)))
            .collect();
        GraphModel::new(nv + self.hyperedges.len(), edges).expect("incidences are in range")
    }

    /// Incidence edges of `Bip H` belonging to the hyperedges in `set`.
    pub fn incidences(&self, set: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        let mut idx = 0;
        for (h, e) in self.hyperedges.iter().enumerate() {
            for _ in 0..e.len() {
                if set.contains(h) {
                    out = out.with(idx);
                }
                idx += 1;
            }
        }
        out
    }

    pub fn covered(&self, set: Subset) -> Subset {
        set.elements()
            .fold(Subset::EMPTY, |acc, h| acc.union(self.hyperedges[h]))
    }

    /// Components of `Bip H|_{set}`: only the hyperedges in `set` and the
    /// vertices they cover.
    pub fn restricted_components(&self, set: Subset) -> usize {
        let nv = self.vertex_count();
        let covered = self.covered(set);
        let mut uf = UnionFind::new(nv + self.hyperedges.len());
        let mut count = covered.len() + set.len();
        for h in set.elements() {
            for v in self.hyperedges[h].elements() {
                if uf.union(v, nv + h) {
                    count -= 1;
                }
            }
        }
        count
    }

    /// Components of `Bip H|_{set}` with every uncovered vertex counted as
    /// its own component.
    pub fn components_with_isolated(&self, set: Subset) -> usize {
        self.restricted_components(set) + self.vertex_count() - self.covered(set).len()
    }

    pub fn mu(&self, set: Subset) -> i64 {
        if set.is_empty() {
            return 0;
        }
        self.covered(set).len() as i64 - self.restricted_components(set) as i64
    }

    pub fn is_connected(&self) -> bool {
        self.bipartite().is_connected()
    }

    /// `Σ_e deg(e) - |E| - |V|`.
    pub fn g(&self) -> i64 {
        let degrees: usize = self.hyperedges.iter().map(|e| e.len()).sum();
        degrees as i64 - self.hyperedges.len() as i64 - self.vertex_count() as i64
    }

    pub fn polymatroid(&self, max_hyperedges: usize) -> Result<Polymatroid, FrontendError> {
        if !self.is_connected() {
            return Err(FrontendError::Disconnected);
        }
        check_size("hyperedge set", self.hyperedges.len(), max_hyperedges)?;
        Ok(Polymatroid::from_fn(self.hyperedges.len(), |s| self.mu(s))?)
    }

    /// Hyperedge-side degree vectors, minus one, of the spanning trees of
    /// `Bip H`.
    pub fn hypertrees_by_spanning_trees(&self) -> BTreeSet<Vec<i64>> {
        let bip = self.bipartite();
        let nv = self.vertex_count();
        bip.spanning_trees()
            .into_iter()
            .map(|tree| {
                let mut deg = vec![-1i64; self.hyperedges.len()];
                for e in tree.elements() {
                    deg[bip.edges()[e].1 - nv] += 1;
                }
                deg
            })
            .collect()
    }

    fn cycle_lengths(&self, set: Subset, limit: usize) -> Vec<usize> {
        self.bipartite().cycle_lengths(self.incidences(set), limit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InteriorRow {
    pub i: usize,
    /// Leading binomial `C(g+i-2, i)` as printed in the hypergraph statement.
    pub printed: i128,
    /// The same closed form with `g + 1 = Σ μ({e}) - μ(E)` in place of `g`.
    pub theorem: i128,
    pub enumerated: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GirthRow {
    pub k: usize,
    /// `[x^i] I = C(g+i, i)` for all `i <= k`.
    pub theorem_prefix: bool,
    /// `[x^i] I = C(g+i-2, i)` for all `i <= k`, the printed binomial.
    pub printed_prefix: bool,
    /// Shortest cycle of `Bip H` has length at least `2k+2`.
    pub girth_condition: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypergraphReport {
    pub vertex_count: usize,
    pub hyperedge_count: usize,
    pub hypertrees: usize,
    pub interior: CoeffPolynomial,
    pub exterior: CoeffPolynomial,
    pub hypertrees_match: bool,
    /// `Σ deg(e) - |E| - |V|`.
    pub g: i64,
    /// `Σ μ({e}) - μ(E)`, expected to be `g + 1`.
    pub g_polymatroid: i64,
    pub r2: Option<usize>,
    pub r2_polymatroid: Option<usize>,
    pub r2_prime: Option<usize>,
    pub r2_prime_polymatroid: Option<usize>,
    /// Sets `H'` of each size `j` where removing `H'` leaves two components
    /// and adding back any `e ∈ H'` reconnects.
    pub hyperplanes: BTreeMap<usize, Vec<Subset>>,
    pub hyperplanes_match: bool,
    /// Sets `H'` whose restriction has a single cycle, of length `2|H'|`.
    pub circuits: BTreeMap<usize, Vec<Subset>>,
    pub circuits_match: bool,
    pub girth: Option<usize>,
    pub exterior_rows: Vec<FormulaRow>,
    pub interior_rows: Vec<InteriorRow>,
    pub girth_rows: Vec<GirthRow>,
}

impl HypergraphReport {
    pub fn passed(&self) -> bool {
        self.hypertrees_match
            && self.g_polymatroid == self.g + 1
            && self.r2 == self.r2_polymatroid
            && self.r2_prime == self.r2_prime_polymatroid
            && self.hyperplanes_match
            && self.circuits_match
            && self.exterior_rows.iter().all(|r| !r.in_range || r.agrees())
            && self.interior_rows.iter().all(|r| r.theorem == r.enumerated)
            && self
                .girth_rows
                .iter()
                .all(|r| r.theorem_prefix == r.girth_condition)
    }
}

fn nonempty(map: BTreeMap<usize, Vec<Subset>>) -> BTreeMap<usize, Vec<Subset>> {
    map.into_iter().filter(|(_, v)| !v.is_empty()).collect()
}

/// Computes the hypergraph-level thresholds and sets from `Bip H` directly
/// and compares them with those of the hypertree polymatroid.
pub fn hypergraph_structure(h: &HypergraphModel) -> Result<HypergraphReport, FrontendError> {
    let p = h.polymatroid(DEFAULT_MAX_EDGES)?;
    let m = h.hyperedge_count();
    let full = Subset::full(m);
    let (interior, exterior) = activity_polynomials(&p);
    let hypertrees: BTreeSet<Vec<i64>> = p.bases().into_iter().map(|b| b.into_inner()).collect();
    let summary = StructureSummary::of(&p);

    let r2 = Subset::all(m)
        .filter(|&removed| h.components_with_isolated(full.difference(removed)) >= 3)
        .map(|s| s.len())
        .min();

    let mut hyperplanes: BTreeMap<usize, Vec<Subset>> = BTreeMap::new();
    for removed in Subset::all(m) {
        let kept = full.difference(removed);
        if h.components_with_isolated(kept) == 2
            && removed
                .elements()
                .all(|e| h.components_with_isolated(kept.with(e)) == 1)
        {
            hyperplanes.entry(removed.len()).or_default().push(removed);
        }
    }
    let mut from_flats: BTreeMap<usize, Vec<Subset>> = BTreeMap::new();
    for (j, flats) in nonempty(hyperplane_sets(&p)) {
        let mut v: Vec<Subset> = flats.into_iter().map(|f| f.complement(m)).collect();
        v.sort();
        from_flats.insert(j, v);
    }
    for v in hyperplanes.values_mut() {
        v.sort();
    }

    let r2_prime = Subset::all(m)
        .filter(|&s| h.cycle_lengths(s, 2).len() >= 2)
        .map(|s| s.len())
        .min();
    let mut circuits: BTreeMap<usize, Vec<Subset>> = BTreeMap::new();
    for s in Subset::all(m) {
        if h.cycle_lengths(s, 2) == [2 * s.len()] {
            circuits.entry(s.len()).or_default().push(s);
        }
    }

    let g = h.g();
    let girth = h.bipartite().girth();
    let exterior_rows = summary.formula_table(Side::Exterior, &exterior, m);
    let interior_bound = summary.thresholds.r_prime(2).unwrap_or(m + 1);
    let interior_rows = (0..interior_bound.min(m + 1))
        .map(|i| {
            let ii = i as i64;
            let tail: i128 = (0..=ii)
                .map(|j| {
                    binomial(g + ii - 1 - j, ii - j) * summary.circuit_count(j as usize) as i128
                })
                .sum();
            InteriorRow {
                i,
                printed: binomial(g + ii - 2, ii) - tail,
                theorem: summary.formula(Side::Interior, i),
                enumerated: interior.coeff(i) as i128,
            }
        })
        .collect();
    let prefix = |k: usize, shift: i64| {
        (0..=k).all(|i| interior.coeff(i) as i128 == binomial(g + i as i64 + shift, i as i64))
    };
    let girth_rows = (0..=m)
        .map(|k| GirthRow {
            k,
            theorem_prefix: prefix(k, 0),
            printed_prefix: prefix(k, -2),
            girth_condition: girth.is_none_or(|len| len >= 2 * k + 2),
        })
        .collect();

    Ok(HypergraphReport {
        vertex_count: h.vertex_count(),
        hyperedge_count: m,
        hypertrees: hypertrees.len(),
        hypertrees_match: hypertrees == h.hypertrees_by_spanning_trees(),
        interior,
        exterior,
        g,
        g_polymatroid: p.dual_total_rank(),
        r2,
        r2_polymatroid: summary.thresholds.r(2),
        r2_prime,
        r2_prime_polymatroid: summary.thresholds.r_prime(2),
        hyperplanes_match: hyperplanes == from_flats,
        hyperplanes,
        circuits_match: circuits == nonempty(circuit_sets(&p)),
        circuits,
        girth,
        exterior_rows,
        interior_rows,
        girth_rows,
    })
}
