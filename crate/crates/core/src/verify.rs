//! The identity suite run by `polymat verify`.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::activity::{
    activities, activity_polynomials, check_duality, check_permutation_invariance,
    exterior_by_recursion,
};
use crate::document::Instance;
use crate::frontends::{
    check_matroid_specialization, graph_cuts_check, hypergraph_structure, FrontendError,
    GraphModel, DEFAULT_MAX_BOND_VERTICES,
};
use crate::poly::CoeffPolynomial;
use crate::polymatroid::Polymatroid;
use crate::structure::{
    binomial_prefix_check, circuit_sets, first_coefficients, guaranteed_prefix, hyperplane_sets,
    is_unimodal, thresholds, FormulaRange, Side, StructureSummary,
};
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    fn check(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skipped(name: &str, detail: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            status: Status::Skipped,
            detail: detail.into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

fn list(p: &CoeffPolynomial) -> String {
    p.coefficient_list()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = vec![
        (0..n).rev().collect::<Vec<_>>(),
        (0..n).map(|e| (e + 1) % n).collect(),
    ];
    let mut rng = StdRng::seed_from_u64(0);
    let mut shuffled: Vec<usize> = (0..n).collect();
    shuffled.shuffle(&mut rng);
    perms.push(shuffled);
    perms
}

/// Every polymatroid-level identity, evaluated on `p`.
pub fn polymatroid_checks(p: &Polymatroid) -> Vec<Verdict> {
    let n = p.n();
    let mut out = vec![Verdict::check(
        "rank axioms",
        true,
        format!("n = {n}, f(E) = {}", p.total_rank()),
    )];
    let bases = p.bases();
    let (interior, exterior) = activity_polynomials(p);

    out.push(Verdict::check(
        "constant coefficients",
        interior.coeff(0) == 1 && exterior.coeff(0) == 1,
        format!(
            "[x^0] I = {}, [y^0] X = {}",
            interior.coeff(0),
            exterior.coeff(0)
        ),
    ));
    out.push(Verdict::check(
        "basis count",
        interior.eval_one() as usize == bases.len() && exterior.eval_one() as usize == bases.len(),
        format!(
            "{} bases, I(1) = {}, X(1) = {}",
            bases.len(),
            interior.eval_one(),
            exterior.eval_one()
        ),
    ));
    out.push(Verdict::check(
        "degree bound",
        interior.degree() < n && exterior.degree() < n,
        format!(
            "deg I = {}, deg X = {}",
            interior.degree(),
            exterior.degree()
        ),
    ));
    let first_active = activities(p)
        .iter()
        .all(|r| r.internally_active.contains(0) && r.externally_active.contains(0));
    out.push(Verdict::check(
        "first element always active",
        first_active,
        "element 1 lies in Int(a) and Ext(a) for every basis",
    ));

    let duality = check_duality(p);
    out.push(Verdict::check(
        "duality",
        duality.passed(),
        format!(
            "I = {}, X* = {}; I* = {}, X = {}",
            list(&duality.interior),
            list(&duality.dual_exterior),
            list(&duality.dual_interior),
            list(&duality.exterior)
        ),
    ));
    let alpha: Vec<i64> = (0..n).map(|t| p.lower_bound(t)).collect();
    let minus_alpha: Vec<i64> = alpha.iter().map(|a| -a).collect();
    out.push(Verdict::check(
        "double dual",
        p.dual().dual().basis_set() == p.basis_set().translate(&minus_alpha),
        format!("P** = P - α with α = {alpha:?}"),
    ));

    let shift: Vec<i64> = (1..=n as i64).collect();
    let translated = p.basis_set().translate(&shift);
    let (ti, te) = activity_polynomials(&translated);
    out.push(Verdict::check(
        "translation invariance",
        ti == interior && te == exterior,
        format!("shift by (1, ..., {n})"),
    ));
    let negated = p.basis_set().negate();
    let (ni, ne) = activity_polynomials(&negated);
    out.push(Verdict::check(
        "negation swaps polynomials",
        ni.coeffs() == exterior.coeffs() && ne.coeffs() == interior.coeffs(),
        "I_{-P} = X_P and X_{-P} = I_P",
    ));

    let bad: Vec<usize> = (0..n)
        .filter(|&t| {
            exterior_by_recursion(p, t)
                .map(|x| x != exterior)
                .unwrap_or(true)
        })
        .map(|t| t + 1)
        .collect();
    out.push(Verdict::check(
        "recursion at every element",
        bad.is_empty(),
        if bad.is_empty() {
            format!("X = {} for t = 1..{n}", list(&exterior))
        } else {
            format!("differs at t = {bad:?}")
        },
    ));

    let (c0, c1) = first_coefficients(p);
    out.push(Verdict::check(
        "first two coefficients",
        exterior.coeff(0) as i128 == c0 && exterior.coeff(1) as i128 == c1,
        format!(
            "predicted {c0}, {c1}; enumerated {}, {}",
            exterior.coeff(0),
            exterior.coeff(1)
        ),
    ));

    let summary = StructureSummary::of(p);
    let th = &summary.thresholds;
    let monotone = |v: &[usize]| {
        v.first() == Some(&0) && v.windows(2).all(|w| w[0] <= w[1]) && v.iter().all(|&x| x <= n)
    };
    let r1 = th.r(1).unwrap_or(usize::MAX);
    let rp1 = th.r_prime(1).unwrap_or(usize::MAX);
    let empty_below = summary
        .hyperplanes
        .iter()
        .all(|(&j, v)| j >= r1 || v.is_empty())
        && summary
            .circuits
            .iter()
            .all(|(&j, v)| j >= rp1 || v.is_empty());
    out.push(Verdict::check(
        "threshold bounds",
        monotone(th.r_values())
            && monotone(th.r_prime_values())
            && th.r_values().len() as i64 == p.total_rank() + 1
            && th.r_prime_values().len() as i64 == summary.g + 1
            && empty_below,
        format!("r = {:?}, r' = {:?}", th.r_values(), th.r_prime_values()),
    ));

    let dual = p.dual();
    let dth = thresholds(&dual);
    out.push(Verdict::check(
        "r'_k(P) = r_k(P*)",
        th.r_prime_values() == dth.r_values(),
        format!(
            "r'(P) = {:?}, r(P*) = {:?}",
            th.r_prime_values(),
            dth.r_values()
        ),
    ));
    out.push(Verdict::check(
        "r_k(P) = r'_k(P*)",
        th.r_values() == dth.r_prime_values(),
        format!(
            "r(P) = {:?}, r'(P*) = {:?}; equal whenever α = 0, here α = {alpha:?}",
            th.r_values(),
            dth.r_prime_values()
        ),
    ));
    let dual_hyperplanes = hyperplane_sets(&dual);
    let circuits_match = circuit_sets(p).into_iter().all(|(j, mut cs)| {
        let mut expected: Vec<Subset> = dual_hyperplanes[&j]
            .iter()
            .map(|h| h.complement(n))
            .collect();
        cs.sort();
        expected.sort();
        cs == expected
    });
    out.push(Verdict::check(
        "circuits are dual hyperplane complements",
        circuits_match,
        "C_j(P) = complements of H_j(P*)",
    ));

    for (side, poly, name) in [
        (Side::Exterior, &exterior, "exterior formula"),
        (Side::Interior, &interior, "interior formula"),
    ] {
        let rows = summary.formula_table(side, poly, n);
        let bad: Vec<usize> = rows
            .iter()
            .filter(|r| r.in_range && !r.agrees())
            .map(|r| r.i)
            .collect();
        let beyond = rows.iter().filter(|r| !r.in_range && !r.agrees()).count();
        out.push(Verdict::check(
            name,
            bad.is_empty(),
            if bad.is_empty() {
                let range = match summary.range(side) {
                    FormulaRange::Below(b) => format!("i < {b}"),
                    FormulaRange::Unbounded => "every i".into(),
                };
                format!("agrees for {range}; {beyond} differences beyond")
            } else {
                format!("differs inside the guaranteed range at i = {bad:?}")
            },
        ));
    }

    let ext_prefix = guaranteed_prefix(&exterior, summary.range(Side::Exterior));
    let int_prefix = guaranteed_prefix(&interior, summary.range(Side::Interior));
    out.push(Verdict::check(
        "unimodal prefixes",
        is_unimodal(&ext_prefix) && is_unimodal(&int_prefix),
        format!("exterior {ext_prefix:?}, interior {int_prefix:?}"),
    ));

    let bad: Vec<usize> = (0..n)
        .filter(|&k| !binomial_prefix_check(p, &interior, &exterior, k).holds())
        .collect();
    out.push(Verdict::check(
        "binomial prefix equivalences",
        bad.is_empty(),
        if bad.is_empty() {
            format!("k = 0..{}", n - 1)
        } else {
            format!("fails at k = {bad:?}")
        },
    ));

    let perms = permutations(n);
    let perm_ok = perms
        .iter()
        .all(|perm| check_permutation_invariance(p, perm).is_ok_and(|r| r.passed()));
    out.push(Verdict::check(
        "permutation invariance",
        perm_ok,
        format!("{} relabelings", perms.len()),
    ));
    out
}

fn graph_checks(g: &GraphModel) -> Vec<Verdict> {
    let mut out = Vec::new();
    let m = g.cycle_matroid();
    match check_matroid_specialization(&m) {
        Ok(r) => out.push(Verdict::check(
            "cycle matroid specialization",
            r.passed(),
            format!("T(1,1) = {}, T(1,y) = {:?}", r.tutte_at_one, r.tutte_y_line),
        )),
        Err(e) => out.push(Verdict::skipped(
            "cycle matroid specialization",
            e.to_string(),
        )),
    }
    if !g.is_connected() {
        out.push(Verdict::skipped(
            "edge cut formula",
            "graph is disconnected",
        ));
        return out;
    }
    let connectivity = match g.edge_connectivity(DEFAULT_MAX_BOND_VERTICES) {
        Ok(Some(c)) => c,
        Ok(None) => {
            out.push(Verdict::skipped("edge cut formula", "single vertex"));
            return out;
        }
        Err(e) => {
            out.push(Verdict::skipped("edge cut formula", e.to_string()));
            return out;
        }
    };
    let k = connectivity - 1;
    match graph_cuts_check(g, k) {
        Ok(r) => out.push(Verdict::check(
            "edge cut formula",
            r.passed(),
            format!(
                "k = {k}, bonds by size {:?}, r_2 = {:?}, bonds match hyperplanes: {}",
                r.bonds_by_size, r.r2, r.bonds_match_hyperplanes
            ),
        )),
        Err(e @ FrontendError::TooLarge { .. }) => {
            out.push(Verdict::skipped("edge cut formula", e.to_string()))
        }
        Err(e) => out.push(Verdict::check("edge cut formula", false, e.to_string())),
    }
    out
}

/// The polymatroid suite plus the oracles that apply to the input's kind.
pub fn instance_checks(instance: &Instance) -> Vec<Verdict> {
    let mut out = polymatroid_checks(instance.polymatroid());
    match instance {
        Instance::RankTable(_) => {}
        Instance::Graph(g, _) => out.extend(graph_checks(g)),
        Instance::Matroid(m, _) => match check_matroid_specialization(m) {
            Ok(r) => out.push(Verdict::check(
                "matroid specialization",
                r.passed(),
                format!(
                    "T(1,1) = {}, hyperplanes match: {}, circuits match: {:?}",
                    r.tutte_at_one, r.hyperplanes_match, r.circuits_match
                ),
            )),
            Err(e) => out.push(Verdict::skipped("matroid specialization", e.to_string())),
        },
        Instance::Hypergraph(h, _) => match hypergraph_structure(h) {
            Ok(r) => out.push(Verdict::check(
                "hypergraph structure",
                r.passed(),
                format!(
                    "{} hypertrees, girth {:?}, r_2 = {:?}, r'_2 = {:?}",
                    r.hypertrees, r.girth, r.r2, r.r2_prime
                ),
            )),
            Err(e) => out.push(Verdict::check("hypergraph structure", false, e.to_string())),
        },
    }
    out
}
