//! Exact checks for small uniform hypergraphs: weak two-colourings,
//! chromatic and transversal numbers, criticality verdicts with replayable
//! certificates, and the set-pair counting bound that caps the size of
//! transversal-critical instances.
//!
//! Vertices are labels in `1..=30`, so vertex sets are single machine
//! words and every search is exhaustive. All returned witnesses are
//! lexicographically least in ascending-list order, which makes output
//! byte-for-byte reproducible.

pub mod certify;
pub mod color;
pub mod corpus;
pub mod error;
pub mod hypergraph;
mod parallel;
pub mod report;
pub mod setpairs;
pub mod transversal;
pub mod vset;

pub use error::{Error, Result};
pub use hypergraph::{emit_edge_list, parse_edge_list, Graph, Hypergraph};
pub use vset::{Vertex, VertexSet, MAX_VERTEX};
