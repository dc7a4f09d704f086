//! Multigraphs, their cycle matroids, and bonds (minimal edge cuts).

use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::matroid::MatroidModel;
use super::tutte::TuttePolynomial;
use super::{check_size, FrontendError, DEFAULT_MAX_BOND_VERTICES, DEFAULT_MAX_EDGES};
use crate::poly::binomial;
use crate::polymatroid::Polymatroid;
use crate::structure::{hyperplane_sets, thresholds};
use crate::subset::{Subset, MAX_ELEMENTS};

/// A multigraph on vertices `0..vertex_count`; edges keep their input order,
/// which fixes the element order of the cycle matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphModel {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphModel {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, FrontendError> {
        if vertex_count == 0 {
            return Err(FrontendError::NoVertices);
        }
        check_size("edge list", edges.len(), MAX_ELEMENTS)?;
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(FrontendError::VertexOutOfRange {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
        }
        Ok(GraphModel {
            vertex_count,
            edges,
        })
    }

    /// The complete graph on `n` vertices, edges in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        GraphModel::new(n, edges).expect("valid complete graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn all_edges(&self) -> Subset {
        Subset::full(self.edges.len())
    }

    /// Components of the spanning subgraph `(V, edge_set)`.
    pub fn components(&self, edge_set: Subset) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut count = self.vertex_count;
        for e in edge_set.elements() {
            let (u, v) = self.edges[e];
            if uf.union(u, v) {
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.components(self.all_edges()) == 1
    }

    /// Cycle-matroid rank `|V| - c(V, A)`.
    pub fn rank(&self, edge_set: Subset) -> usize {
        self.vertex_count - self.components(edge_set)
    }

    /// `g = |E| - |V| + 1`, the nullity of a connected graph.
    pub fn cyclomatic_number(&self) -> i64 {
        self.edges.len() as i64 - self.vertex_count as i64
            + self.components(self.all_edges()) as i64
    }

    /// The polymatroid of the cycle matroid, rank table built from component
    /// counts.
    pub fn polymatroid(&self, max_edges: usize) -> Result<Polymatroid, FrontendError> {
        check_size("edge set", self.edges.len(), max_edges)?;
        Ok(Polymatroid::from_fn(self.edges.len(), |s| {
            self.rank(s) as i64
        })?)
    }

    /// Maximal spanning forests (spanning trees when connected) as edge sets,
    /// in increasing bitmask order.
    pub fn spanning_trees(&self) -> Vec<Subset> {
        let target = self.rank(self.all_edges());
        let mut out = Vec::new();
        let labels: Vec<usize> = (0..self.vertex_count).collect();
        self.grow_forest(0, Subset::EMPTY, labels, target, &mut out);
        out.sort();
        out
    }

    fn grow_forest(
        &self,
        next: usize,
        chosen: Subset,
        labels: Vec<usize>,
        target: usize,
        out: &mut Vec<Subset>,
    ) {
        if chosen.len() == target {
            out.push(chosen);
            return;
        }
        if next == self.edges.len() || chosen.len() + (self.edges.len() - next) < target {
            return;
        }
        let (u, v) = self.edges[next];
        let (lu, lv) = (labels[u], labels[v]);
        if lu != lv {
            let merged = labels
                .iter()
                .map(|&l| if l == lv { lu } else { l })
                .collect();
            self.grow_forest(next + 1, chosen.with(next), merged, target, out);
        }
        self.grow_forest(next + 1, chosen, labels, target, out);
    }

    pub fn cycle_matroid(&self) -> MatroidModel {
        MatroidModel::from_trusted(self.edges.len(), self.spanning_trees())
    }

    fn side_is_connected(&self, side: u32) -> bool {
        let members = Subset::from_bits(side);
        let mut uf = UnionFind::new(self.vertex_count);
        let mut count = members.len();
        for &(u, v) in &self.edges {
            if members.contains(u) && members.contains(v) && uf.union(u, v) {
                count -= 1;
            }
        }
        count == 1
    }

    /// All bonds: edge sets crossing a bipartition `(S, V - S)` whose sides
    /// both induce connected subgraphs. Requires a connected graph.
    pub fn bonds(&self, max_vertices: usize) -> Result<Vec<Subset>, FrontendError> {
        check_size("vertex set", self.vertex_count, max_vertices)?;
        if !self.is_connected() {
            return Err(FrontendError::Disconnected);
        }
        let n = self.vertex_count;
        let all = Subset::full(n).bits();
        let mut out = Vec::new();
        // vertex 0 always on the first side
        for rest in 0..(1u32 << (n - 1)) {
            let side = (rest << 1) | 1;
            if side == all {
                continue;
            }
            if !self.side_is_connected(side) || !self.side_is_connected(all & !side) {
                continue;
            }
            let s = Subset::from_bits(side);
            let cut = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| s.contains(u) != s.contains(v))
                .fold(Subset::EMPTY, |acc, (e, _)| acc.with(e));
            out.push(cut);
        }
        out.sort();
        Ok(out)
    }

    /// Smallest bond size; `None` for a single vertex.
    pub fn edge_connectivity(&self, max_vertices: usize) -> Result<Option<usize>, FrontendError> {
        Ok(self.bonds(max_vertices)?.iter().map(|b| b.len()).min())
    }

    /// Lengths of up to `limit` simple cycles inside `edge_set`, found by
    /// backtracking from each cycle's smallest vertex.
    pub fn cycle_lengths(&self, edge_set: Subset, limit: usize) -> Vec<usize> {
        let mut found = Vec::new();
        for e in edge_set.elements() {
            let (u, v) = self.edges[e];
            if u == v {
                found.push(1);
                if found.len() >= limit {
                    return found;
                }
            }
        }
        let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count];
        for e in edge_set.elements() {
            let (u, v) = self.edges[e];
            if u != v {
                incident[u].push((e, v));
                incident[v].push((e, u));
            }
        }
        for start in 0..self.vertex_count {
            let mut visited = vec![false; self.vertex_count];
            visited[start] = true;
            for &(first, w) in &incident[start] {
                if w < start {
                    continue;
                }
                visited[w] = true;
                self.walk(
                    &incident,
                    start,
                    w,
                    first,
                    first,
                    1,
                    &mut visited,
                    &mut found,
                    limit,
                );
                visited[w] = false;
                if found.len() >= limit {
                    return found;
                }
            }
        }
        found
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        incident: &[Vec<(usize, usize)>],
        start: usize,
        at: usize,
        first: usize,
        last: usize,
        len: usize,
        visited: &mut [bool],
        found: &mut Vec<usize>,
        limit: usize,
    ) {
        for &(e, w) in &incident[at] {
            if found.len() >= limit {
                return;
            }
            if e == last {
                continue;
            }
            if w == start {
                // each cycle is seen once in each direction
                if first < e {
                    found.push(len + 1);
                }
                continue;
            }
            if w < start || visited[w] {
                continue;
            }
            visited[w] = true;
            self.walk(incident, start, w, first, e, len + 1, visited, found, limit);
            visited[w] = false;
        }
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                return Some(1);
            }
            incident[u].push((e, v));
            incident[v].push((e, u));
        }
        for root in 0..self.vertex_count {
            let mut dist = vec![usize::MAX; self.vertex_count];
            let mut via = vec![usize::MAX; self.vertex_count];
            let mut queue = std::collections::VecDeque::from([root]);
            dist[root] = 0;
            while let Some(u) = queue.pop_front() {
                for &(e, w) in &incident[u] {
                    if e == via[u] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        via[w] = e;
                        queue.push_back(w);
                    } else {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphCutRow {
    pub i: usize,
    /// `[y^{g-i}] T_G(1, y)` from the corank–nullity expansion.
    pub tutte: i128,
    /// `C(|V|+i-2, i) - Σ_j C(|V|+i-2-j, i-j) |SC_j|`.
    pub formula: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphCutReport {
    pub k: usize,
    pub vertex_count: usize,
    pub g: i64,
    pub edge_connectivity: Option<usize>,
    /// `|SC_j|` for every `j` with at least one bond.
    pub bonds_by_size: BTreeMap<usize, usize>,
    pub rows: Vec<GraphCutRow>,
    /// `r_2` of the cycle-matroid polymatroid; absent below rank 2.
    pub r2: Option<usize>,
    /// `3(k+1)/2 <= r_2`.
    pub threshold_holds: bool,
    /// Bonds are exactly the complements of the hyperplane flats.
    pub bonds_match_hyperplanes: bool,
}

impl GraphCutReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.tutte == r.formula)
            && self.threshold_holds
            && self.bonds_match_hyperplanes
    }
}

/// Checks the bond formula for `[y^{g-i}] T_G(1, y)` on a
/// `(k+1)`-edge-connected graph for every `i < 3(k+1)/2` with `i <= g`.
pub fn graph_cuts_check(graph: &GraphModel, k: usize) -> Result<GraphCutReport, FrontendError> {
    check_size("edge set", graph.edge_count(), DEFAULT_MAX_EDGES)?;
    let bonds = graph.bonds(DEFAULT_MAX_BOND_VERTICES)?;
    let connectivity = bonds.iter().map(|b| b.len()).min();
    if let Some(actual) = connectivity {
        if actual < k + 1 {
            return Err(FrontendError::InsufficientConnectivity {
                required: k + 1,
                actual,
            });
        }
    }
    let mut bonds_by_size = BTreeMap::new();
    for b in &bonds {
        *bonds_by_size.entry(b.len()).or_insert(0usize) += 1;
    }
    let sc = |j: usize| bonds_by_size.get(&j).copied().unwrap_or(0) as i128;

    let m = graph.edge_count();
    let tutte = TuttePolynomial::from_rank(m, |s| graph.rank(s));
    let y_line = tutte.y_line();
    let g = graph.cyclomatic_number();
    let v = graph.vertex_count() as i64;
    let rows = (0..)
        .take_while(|&i| 2 * i < 3 * (k + 1) && i as i64 <= g)
        .map(|i| {
            let ii = i as i64;
            let mut formula = binomial(v + ii - 2, ii);
            for j in 0..=i {
                formula -= binomial(v + ii - 2 - j as i64, ii - j as i64) * sc(j);
            }
            GraphCutRow {
                i,
                tutte: y_line.get((g - ii) as usize).copied().unwrap_or(0),
                formula,
            }
        })
        .collect();

    let p = graph.polymatroid(DEFAULT_MAX_EDGES)?;
    let r2 = thresholds(&p).r(2);
    let threshold_holds = r2.is_none_or(|r| 3 * (k + 1) <= 2 * r);
    let mut complements: Vec<Subset> = hyperplane_sets(&p)
        .into_values()
        .flatten()
        .map(|h| h.complement(m))
        .collect();
    complements.sort();

    Ok(GraphCutReport {
        k,
        vertex_count: graph.vertex_count(),
        g,
        edge_connectivity: connectivity,
        bonds_by_size,
        rows,
        r2,
        threshold_holds,
        bonds_match_hyperplanes: complements == bonds,
    })
}
