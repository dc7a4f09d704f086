//! Internal and external activity of bases, and the interior and exterior
//! polynomials built from them.
//!
//! For a basis `a`, index `i` is internally active when no exchange
//! `a - e_i + e_j` with `j < i` stays in the basis set, and externally active
//! when no `a + e_i - e_j` with `j < i` does. The interior polynomial counts
//! bases by `n - |Int(a)|`, the exterior one by `n - |Ext(a)|`.

use serde::Serialize;
use thiserror::Error;

use crate::poly::{CoeffPolynomial, Variable};
use crate::polymatroid::{BasisVector, LatticeSet, Polymatroid, PolymatroidError};
use crate::subset::Subset;

/// Anything that can answer membership queries for integer points and list
/// its points. Activities only depend on this.
pub trait BasisSet {
    fn dim(&self) -> usize;

    fn contains(&self, v: &[i64]) -> bool;

    fn basis_vectors(&self) -> Vec<Vec<i64>>;
}

impl BasisSet for Polymatroid {
    fn dim(&self) -> usize {
        self.n()
    }

    fn contains(&self, v: &[i64]) -> bool {
        self.is_member(v).unwrap_or(false)
    }

    fn basis_vectors(&self) -> Vec<Vec<i64>> {
        self.bases()
            .into_iter()
            .map(BasisVector::into_inner)
            .collect()
    }
}

impl BasisSet for LatticeSet {
    fn dim(&self) -> usize {
        LatticeSet::dim(self)
    }

    fn contains(&self, v: &[i64]) -> bool {
        LatticeSet::contains(self, v)
    }

    fn basis_vectors(&self) -> Vec<Vec<i64>> {
        self.points().cloned().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActivityError {
    #[error("{0} is not a basis")]
    NotABasis(BasisVector),
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActivityReport {
    pub basis: BasisVector,
    pub internally_active: Subset,
    pub externally_active: Subset,
}

/// Activities of basis `a`.
pub fn activity<S: BasisSet + ?Sized>(set: &S, a: &[i64]) -> Result<ActivityReport, ActivityError> {
    if a.len() != set.dim() {
        return Err(ActivityError::DimensionMismatch {
            expected: set.dim(),
            got: a.len(),
        });
    }
    if !set.contains(a) {
        return Err(ActivityError::NotABasis(BasisVector::new(a.to_vec())));
    }
    Ok(activity_of_member(set, a))
}

fn activity_of_member<S: BasisSet + ?Sized>(set: &S, a: &[i64]) -> ActivityReport {
    let n = a.len();
    let mut probe = a.to_vec();
    let mut internal = Subset::EMPTY;
    let mut external = Subset::EMPTY;
    for i in 0..n {
        let mut int_active = true;
        let mut ext_active = true;
        for j in 0..i {
            // a - e_i + e_j
            probe[i] -= 1;
            probe[j] += 1;
            if int_active && set.contains(&probe) {
                int_active = false;
            }
            // a + e_i - e_j
            probe[i] += 2;
            probe[j] -= 2;
            if ext_active && set.contains(&probe) {
                ext_active = false;
            }
            probe[i] -= 1;
            probe[j] += 1;
            if !int_active && !ext_active {
                break;
            }
        }
        if int_active {
            internal = internal.with(i);
        }
        if ext_active {
            external = external.with(i);
        }
    }
    ActivityReport {
        basis: BasisVector::new(a.to_vec()),
        internally_active: internal,
        externally_active: external,
    }
}

/// Activity reports for every basis, in the order the set lists them.
pub fn activities<S: BasisSet + ?Sized>(set: &S) -> Vec<ActivityReport> {
    set.basis_vectors()
        .iter()
        .map(|a| activity_of_member(set, a))
        .collect()
}

/// Interior and exterior polynomials from one pass over the bases.
pub fn activity_polynomials<S: BasisSet + ?Sized>(set: &S) -> (CoeffPolynomial, CoeffPolynomial) {
    let n = set.dim();
    let mut interior = vec![0u64; n + 1];
    let mut exterior = vec![0u64; n + 1];
    for report in activities(set) {
        interior[n - report.internally_active.len()] += 1;
        exterior[n - report.externally_active.len()] += 1;
    }
    (
        CoeffPolynomial::new(interior, Variable::X),
        CoeffPolynomial::new(exterior, Variable::Y),
    )
}

pub fn interior_polynomial<S: BasisSet + ?Sized>(set: &S) -> CoeffPolynomial {
    activity_polynomials(set).0
}

pub fn exterior_polynomial<S: BasisSet + ?Sized>(set: &S) -> CoeffPolynomial {
    activity_polynomials(set).1
}

/// The exterior polynomial through the slice recursion at element `t`:
///
/// `X_P(y) = X_{P/t}(y) + y · Σ_{j ∈ T_t, j ≠ f({t})} X_{P^t_j}(y)`.
///
/// Minors are expanded at their last element until one element remains,
/// where the polynomial is 1.
pub fn exterior_by_recursion(
    p: &Polymatroid,
    t: usize,
) -> Result<CoeffPolynomial, PolymatroidError> {
    if t >= p.n() {
        return Err(PolymatroidError::ElementOutOfRange {
            element: t,
            n: p.n(),
        });
    }
    Ok(expand(p, t))
}

fn expand(p: &Polymatroid, t: usize) -> CoeffPolynomial {
    if p.n() == 1 {
        return CoeffPolynomial::one(Variable::Y);
    }
    let contracted = p.contract(t).expect("t is in range and n >= 2");
    let mut acc = expand(&contracted, contracted.n() - 1);
    let mut slices = CoeffPolynomial::new(vec![], Variable::Y);
    for j in p.lower_bound(t)..p.upper_bound(t) {
        let slice = p.slice(t, j).expect("j lies in the slice range");
        slices.add_shifted(&expand(&slice, slice.n() - 1), 0);
    }
    acc.add_shifted(&slices, 1);
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub interior: CoeffPolynomial,
    pub exterior: CoeffPolynomial,
    pub dual_interior: CoeffPolynomial,
    pub dual_exterior: CoeffPolynomial,
}

impl DualityReport {
    /// `I_P = X_{P*}` and `I_{P*} = X_P`, coefficientwise.
    pub fn passed(&self) -> bool {
        self.interior.coeffs() == self.dual_exterior.coeffs()
            && self.dual_interior.coeffs() == self.exterior.coeffs()
    }
}

pub fn check_duality(p: &Polymatroid) -> DualityReport {
    let (interior, exterior) = activity_polynomials(p);
    let (dual_interior, dual_exterior) = activity_polynomials(&p.dual());
    DualityReport {
        interior,
        exterior,
        dual_interior,
        dual_exterior,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationReport {
    /// 0-based images: element `e` is relabeled `permutation[e]`.
    pub permutation: Vec<usize>,
    pub interior: CoeffPolynomial,
    pub exterior: CoeffPolynomial,
    pub relabeled_interior: CoeffPolynomial,
    pub relabeled_exterior: CoeffPolynomial,
}

impl PermutationReport {
    pub fn passed(&self) -> bool {
        self.interior == self.relabeled_interior && self.exterior == self.relabeled_exterior
    }
}

pub fn check_permutation_invariance(
    p: &Polymatroid,
    permutation: &[usize],
) -> Result<PermutationReport, PolymatroidError> {
    let relabeled = p.relabel(permutation)?;
    let (interior, exterior) = activity_polynomials(p);
    let (relabeled_interior, relabeled_exterior) = activity_polynomials(&relabeled);
    Ok(PermutationReport {
        permutation: permutation.to_vec(),
        interior,
        exterior,
        relabeled_interior,
        relabeled_exterior,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{five_element, uniform};

    #[test]
    fn exterior_activity_examples() {
        let p = five_element();
        let r = activity(&p, &[0, 0, 1, 0, 2]).unwrap();
        assert_eq!(r.externally_active, Subset::from_labels(&[1, 2, 3, 4, 5]));
        assert_eq!(r.internally_active, Subset::from_labels(&[1, 2, 4]));
        let r = activity(&p, &[1, 1, 0, 1, 0]).unwrap();
        assert_eq!(r.externally_active, Subset::from_labels(&[1]));
    }

    #[test]
    fn probes_behind_the_examples() {
        let p = five_element();
        for probe in [
            [0, 2, 0, 1, 0],
            [0, 1, 1, 1, 0],
            [0, 1, 0, 2, 0],
            [0, 1, 0, 1, 1],
        ] {
            assert!(p.is_member(&probe).unwrap(), "{probe:?}");
        }
        assert!(p.is_member(&[1, 0, 0, 0, 2]).unwrap());
        assert!(p.is_member(&[1, 0, 1, 0, 1]).unwrap());
    }

    #[test]
    fn non_basis_rejected() {
        let p = five_element();
        assert!(matches!(
            activity(&p, &[1, 0, 0, 0, 0]),
            Err(ActivityError::NotABasis(_))
        ));
        assert!(matches!(
            activity(&p, &[1, 0]),
            Err(ActivityError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn example_exterior_polynomial() {
        // Frozen from activity enumeration over the 17 bases.
        let x = exterior_polynomial(&five_element());
        assert_eq!(x.coeffs(), &[1, 3, 5, 6, 2]);
        assert_eq!(x.eval_one(), 17);
    }

    #[test]
    fn single_point_polymatroid() {
        let p = Polymatroid::from_fn(3, |_| 0).unwrap();
        let (i, x) = activity_polynomials(&p);
        assert_eq!(i.coeffs(), &[1]);
        assert_eq!(x.coeffs(), &[1]);
        assert!(check_duality(&p).passed());
    }

    #[test]
    fn recursion_examples() {
        let p = five_element();
        assert_eq!(
            exterior_by_recursion(&p, 4).unwrap().coeffs(),
            &[1, 3, 5, 6, 2]
        );
        let u = uniform(2, 3);
        assert_eq!(exterior_by_recursion(&u, 2).unwrap().coeffs(), &[1, 2]);
        assert!(exterior_by_recursion(&u, 3).is_err());
    }

    #[test]
    fn recursion_with_a_single_slice_is_the_contraction() {
        // element 1 has f({1}) = f(E) - f(E - 1) = 1 in U_{1,1} ⊕ U_{1,2}
        let p = Polymatroid::from_fn(3, |s| {
            (s.contains(0) as i64) + s.without(0).len().min(1) as i64
        })
        .unwrap();
        assert_eq!(p.slice_range(0), 1..=1);
        assert_eq!(
            exterior_by_recursion(&p, 0).unwrap(),
            exterior_polynomial(&p.contract(0).unwrap())
        );
    }

    #[test]
    fn duality_examples() {
        assert!(check_duality(&five_element()).passed());
        let r = check_duality(&uniform(2, 3));
        assert!(r.passed());
        assert_eq!(r.interior.coeffs(), &[1, 1, 1]);
    }

    #[test]
    fn permutation_examples() {
        let p = five_element();
        assert!(check_permutation_invariance(&p, &[0, 1, 2, 3, 4])
            .unwrap()
            .passed());
        let rev = check_permutation_invariance(&p, &[4, 3, 2, 1, 0]).unwrap();
        assert!(rev.passed());
        assert_eq!(rev.relabeled_exterior.coeffs(), &[1, 3, 5, 6, 2]);
        let u = check_permutation_invariance(&uniform(2, 3), &[2, 0, 1]).unwrap();
        assert_eq!(u.relabeled_exterior.coeffs(), &[1, 2]);
    }

    #[test]
    fn translation_invariance() {
        let p = five_element();
        let moved = p.basis_set().translate(&[-3, 4, 0, 7, -1]);
        assert_eq!(activity_polynomials(&moved), activity_polynomials(&p));
    }

    #[test]
    fn interior_is_exterior_of_reflection() {
        let p = five_element();
        let reflected = p.basis_set().negate();
        assert_eq!(
            interior_polynomial(&p).coeffs(),
            exterior_polynomial(&reflected).coeffs()
        );
    }
}
