//! Graphs, matroids and hypergraphs as polymatroids, together with the
//! independent oracles used to cross-check them: the corank–nullity Tutte
//! expansion, bond enumeration and cycle scans of the incidence graph.

use thiserror::Error;

use crate::polymatroid::ValidationError;
use crate::subset::Subset;

pub mod graph;
pub mod hypergraph;
pub mod matroid;
pub mod tutte;

pub use graph::{graph_cuts_check, GraphCutReport, GraphModel};
pub use hypergraph::{hypergraph_structure, HypergraphModel, HypergraphReport};
pub use matroid::{check_matroid_specialization, MatroidModel, MatroidReport};
pub use tutte::{tutte_oracle, TuttePolynomial};

/// Default cap on vertices for bond enumeration, which scans all bipartitions.
pub const DEFAULT_MAX_BOND_VERTICES: usize = 12;

/// Default cap on ground sets for subset expansions (Tutte oracle, matroid
/// and graph rank tables).
pub const DEFAULT_MAX_EDGES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrontendError {
    #[error("vertex {} is out of range for {count} vertices", .vertex + 1)]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("the graph must have at least one vertex")]
    NoVertices,
    #[error("input is disconnected")]
    Disconnected,
    #[error("edge connectivity {actual} is below the required {required}")]
    InsufficientConnectivity { required: usize, actual: usize },
    #[error("{what} of size {size} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("a matroid needs at least one base")]
    NoBases,
    #[error("element {} is out of range for a ground set of size {n}", .element + 1)]
    ElementOutOfRange { element: usize, n: usize },
    #[error("bases {first} and {second} have different sizes")]
    BaseSizeMismatch { first: Subset, second: Subset },
    #[error("base {0} is listed twice")]
    DuplicateBase(Subset),
    #[error("base exchange fails for {first}, {second} at element {}", .element + 1)]
    BaseExchange {
        first: Subset,
        second: Subset,
        element: usize,
    },
    #[error("hyperedge {} is empty", .0 + 1)]
    EmptyHyperedge(usize),
    #[error("hyperedge {} names vertex index {vertex} outside 0..{count}", .hyperedge + 1)]
    HyperedgeVertexOutOfRange {
        hyperedge: usize,
        vertex: usize,
        count: usize,
    },
    #[error("vertex name {0:?} is repeated")]
    DuplicateVertexName(String),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

pub(crate) fn check_size(
    what: &'static str,
    size: usize,
    limit: usize,
) -> Result<(), FrontendError> {
    if size > limit {
        return Err(FrontendError::TooLarge { what, size, limit });
    }
    Ok(())
}
