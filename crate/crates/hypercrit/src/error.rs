use crate::vset::{Vertex, VertexSet, MAX_VERTEX};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex label space {0} exceeds the {MAX_VERTEX}-vertex limit")]
    TooManyVertices(u64),

    #[error("vertex {0} is not a vertex of this hypergraph")]
    VertexOutOfRange(Vertex),

    #[error("edge may not be empty")]
    EmptyEdge,

    #[error("edge {0} is not contained in the vertex set")]
    EdgeOutsideVertexSet(VertexSet),

    #[error("duplicate edge {0}")]
    DuplicateEdge(VertexSet),

    #[error("{0} is not an edge of this hypergraph")]
    NotAnEdge(VertexSet),

    #[error("{0} is not a subset of the vertex set")]
    NotAVertexSubset(VertexSet),

    #[error("line {line}: invalid token {token:?}")]
    InvalidToken { line: usize, token: String },

    #[error("line {line}: vertex label {label} outside 1..={MAX_VERTEX}")]
    InvalidLabel { line: usize, label: i64 },

    #[error("line {line}: vertex {vertex} repeated within an edge")]
    RepeatedVertex { line: usize, vertex: Vertex },

    #[error("line {line}: duplicate edge {edge}")]
    DuplicateLine { line: usize, edge: VertexSet },

    #[error("colouring assigns no colour to vertex {0}")]
    ColoringNotTotal(Vertex),

    #[error("colour {0} is invalid; colours are 1-based")]
    InvalidColor(usize),

    #[error("no proper colouring exists: some edge has fewer than two vertices")]
    NoProperColoring,

    #[error("hypergraph is not {0}-uniform")]
    NotUniform(usize),

    #[error("blue set for vertex {0} may not contain that vertex")]
    BlueContainsVertex(Vertex),

    #[error("hypergraph is not transversal-critical of order {0}")]
    NotTauCritical(usize),

    #[error("hypergraph is not chromatically critical")]
    NotChromaticCritical,

    #[error("set-pair system is not cross-intersecting")]
    NotCrossIntersecting,

    #[error("ground set has {size} elements; the permutation audit is capped at {cap}")]
    GroundTooLarge { size: usize, cap: usize },

    #[error("complete_uniform requires 1 <= r <= n <= {MAX_VERTEX}, got n={n}, r={r}")]
    UniformBounds { n: Vertex, r: usize },

    #[error("certificate line {line}: {msg}")]
    BundleParse { line: usize, msg: String },
}
