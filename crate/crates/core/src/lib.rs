//! Ordered simplicial complexes and the windowed connected-sum construction.
//!
//! The crate is organised bottom-up:
//!
//! - [`complex`]: finite simplicial complexes stored either as flag complexes
//!   (an edge set) or by their maximal simplices, with simplex membership,
//!   flagness, 1-skeleton distance and Euler characteristic.
//! - [`ordering`]: vertex order relations and validation of the three
//!   ordering axioms (antisymmetry, comparability exactly on edges,
//!   transitivity on triangles).
//! - [`product`]: the ordered product of two ordered complexes, the integer
//!   line truncated to a [`Window`], simplicial projections and exact
//!   realisation of product points from factor points.
//! - [`kakimizu`]: the connected-sum complex on triples `(v1, v2, n)`, built
//!   twice (as an iterated ordered product, and from a direct adjacency rule)
//!   so that each construction is an oracle for the other.
//! - [`toolkit`]: canonical JSON documents, DOT export, fixtures, random and
//!   exhaustive instance generation.

pub mod complex;
pub mod error;
pub mod kakimizu;
pub mod ordering;
pub mod point;
pub mod product;
pub mod toolkit;

pub use complex::{Complex, ComplexData, Distance, Mode, Simplex, VertexId};
pub use error::{Error, Result};
pub use kakimizu::{
    connected_sum_window, label_triple, realize_triple, reorder_sheared, sheared_leq,
    triples_adjacent, unlabel_triple, ConnectedSum, EqualityReport, Method, Provenance,
    SumPipeline, SumWindowComplex, TripleVertex,
};
pub use ordering::{
    restrict_to_adjacent, validate_ordering, Axiom, OrderRelation, OrderedComplex, Violation,
    ViolationReport, Witness,
};
pub use point::WeightedPoint;
pub use product::{ordered_product, z_window, ProductComplex, Side, Window};
