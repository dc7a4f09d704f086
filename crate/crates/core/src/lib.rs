//! Interior and exterior polynomials of integer polymatroids.
//!
//! The crate computes activity polynomials of polymatroids given by explicit
//! rank tables, the structural sets (flats, hyperplane-like sets,
//! circuit-like sets, rank thresholds) that determine their low-order
//! coefficients, and cross-checks both against brute-force oracles. Graphs,
//! matroids given by their bases, and hypergraphs are converted to
//! polymatroids by the [`frontends`].
//!
//! ```
//! use polymat::activity::activity_polynomials;
//! use polymat::instances::five_element;
//! use polymat::{exterior_by_recursion, Side, StructureSummary};
//!
//! let p = five_element();
//! let (interior, exterior) = activity_polynomials(&p);
//! assert_eq!(interior.coeffs(), &[1, 5, 8, 3]);
//! assert_eq!(exterior.coeffs(), &[1, 3, 5, 6, 2]);
//! assert_eq!(exterior_by_recursion(&p, 0).unwrap(), exterior);
//!
//! let s = StructureSummary::of(&p);
//! assert_eq!(s.theorem_coefficient(Side::Exterior, 3), Ok(6));
//! assert!(s.theorem_coefficient(Side::Exterior, 4).is_err()); // i >= r_2 = 4
//! ```

pub mod activity;
pub mod cli;
pub mod document;
pub mod frontends;
pub mod instances;
pub mod poly;
pub mod polymatroid;
pub mod random;
pub mod structure;
pub mod subset;
pub mod verify;

pub use activity::{
    activity, check_duality, check_permutation_invariance, exterior_by_recursion,
    exterior_polynomial, interior_polynomial, ActivityReport, BasisSet,
};
pub use poly::{binomial, CoeffPolynomial, Variable};
pub use polymatroid::{BasisVector, LatticeSet, Polymatroid, RankTable, ValidationError};
pub use structure::{is_unimodal, FormulaRange, Side, StructureSummary, Thresholds};
pub use subset::Subset;
