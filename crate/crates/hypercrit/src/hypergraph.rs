//! Hypergraph data model and the edge-list text format.
//!
//! A hypergraph is a set of vertex labels plus a list of distinct non-empty
//! edges over those labels. Edges are kept in canonical form (each edge is a
//! [`VertexSet`], the list is sorted in ascending-list lexicographic order),
//! so two hypergraphs compare equal iff they have the same vertices and
//! edges.
//!
//! Vertex labels are 1-based and retained by every operation: deleting a
//! vertex or inducing on a subset never relabels the survivors. The vertex
//! set is carried explicitly so that isolated vertices are representable and
//! induced sub-hypergraphs remember which labels are still present.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::vset::{Vertex, VertexSet, MAX_VERTEX};

/// Hard cap on the number of vertex labels; see [`crate::vset::MAX_VERTEX`].
pub const MAX_VERTICES: Vertex = MAX_VERTEX;

#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    verts: VertexSet,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Hypergraph on vertex set `{1..n}`. Edges may arrive in any order;
    /// they are canonicalised. Rejects `n > MAX_VERTICES`, empty edges,
    /// edges with labels outside `{1..n}` and duplicate edges.
    pub fn new(n: Vertex, edges: Vec<VertexSet>) -> Result<Hypergraph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n as u64));
        }
        Hypergraph::with_vertex_set(VertexSet::full(n), edges)
    }

    /// Hypergraph on an explicit vertex set, e.g. one with gaps left by
    /// vertex deletions.
    pub fn with_vertex_set(verts: VertexSet, mut edges: Vec<VertexSet>) -> Result<Hypergraph> {
        for &e in &edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if !e.is_subset_of(verts) {
                return Err(Error::EdgeOutsideVertexSet(e));
            }
        }
        edges.sort();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0]));
            }
        }
        Ok(Hypergraph { verts, edges })
    }

    pub fn verts(&self) -> VertexSet {
        self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    /// Largest label present, 0 for the empty vertex set.
    pub fn max_label(&self) -> Vertex {
        self.verts.max_vertex().unwrap_or(0)
    }

    /// Edges in ascending-list lexicographic order.
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// True iff every edge has exactly `r` vertices (vacuously true when
    /// edgeless).
    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    /// Number of edges containing `v`. Labels not in the vertex set have
    /// degree 0.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Degree of every vertex in the vertex set, including isolated ones.
    pub fn degrees(&self) -> BTreeMap<Vertex, usize> {
        self.verts.iter().map(|v| (v, self.degree(v))).collect()
    }

    /// None when the vertex set is empty.
    pub fn min_degree(&self) -> Option<usize> {
        self.verts.iter().map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.verts.iter().map(|v| self.degree(v)).max()
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        self.verts.iter().filter(|&v| self.degree(v) == 0).collect()
    }

    /// Copy of the hypergraph without edge `e`. Errors when `e` is not an
    /// edge.
    pub fn delete_edge(&self, e: VertexSet) -> Result<Hypergraph> {
        match self.edges.binary_search(&e) {
            Ok(i) => {
                let mut edges = self.edges.clone();
                edges.remove(i);
                Ok(Hypergraph {
                    verts: self.verts,
                    edges,
                })
            }
            Err(_) => Err(Error::NotAnEdge(e)),
        }
    }

    /// Sub-hypergraph induced on `s`: vertex set becomes `s` (labels are
    /// retained, nothing is renumbered) and only edges fully inside `s`
    /// survive. Errors when `s` is not a subset of the vertex set.
    pub fn induce(&self, s: VertexSet) -> Result<Hypergraph> {
        if !s.is_subset_of(self.verts) {
            return Err(Error::NotAVertexSubset(s));
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| e.is_subset_of(s))
            .collect();
        Ok(Hypergraph { verts: s, edges })
    }

    /// `induce` on the complement of `{v}`: drops `v` and every incident
    /// edge.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Hypergraph> {
        if !self.verts.contains(v) {
            return Err(Error::VertexOutOfRange(v));
        }
        self.induce(self.verts.without(v))
    }

    /// Link of `v` in a 3-uniform hypergraph: the graph on the remaining
    /// vertices whose pairs `{x,y}` come from edges `{v,x,y}`. A vertex in
    /// no edge has an empty link.
    pub fn link_graph(&self, v: Vertex) -> Result<Graph> {
        if !self.is_uniform(3) {
            return Err(Error::NotUniform(3));
        }
        if !self.verts.contains(v) {
            return Err(Error::VertexOutOfRange(v));
        }
        let pairs = self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| e.without(v))
            .collect();
        Graph::new(self.verts.without(v), pairs)
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(verts={}, edges=[", self.verts)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Simple graph with an explicit vertex set; pairs are 2-element
/// [`VertexSet`]s in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    verts: VertexSet,
    pairs: Vec<VertexSet>,
}

impl Graph {
    pub fn new(verts: VertexSet, mut pairs: Vec<VertexSet>) -> Result<Graph> {
        for &p in &pairs {
            if p.len() != 2 {
                return Err(Error::NotUniform(2));
            }
            if !p.is_subset_of(verts) {
                return Err(Error::EdgeOutsideVertexSet(p));
            }
        }
        pairs.sort();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0]));
            }
        }
        Ok(Graph { verts, pairs })
    }

    pub fn verts(&self) -> VertexSet {
        self.verts
    }

    pub fn pairs(&self) -> &[VertexSet] {
        &self.pairs
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// The same graph viewed as a 2-uniform hypergraph (vertex set kept).
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph {
            verts: self.verts,
            edges: self.pairs.clone(),
        }
    }
}

/// Parses the edge-list text format: UTF-8, one edge per non-blank line,
/// whitespace-separated positive integer labels. The vertex set becomes
/// `{1..max label}` (empty when there are no edges). Rejects non-integer
/// tokens, labels outside `1..=MAX_VERTICES`, vertices repeated within a
/// line and duplicate edges (also when spelled in a different order).
pub fn parse_edge_list(text: &str) -> Result<Hypergraph> {
    let mut edges: Vec<VertexSet> = Vec::new();
    let mut max_label: Vertex = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let mut edge = VertexSet::EMPTY;
        for token in raw.split_whitespace() {
            let label: i64 = token.parse().map_err(|_| Error::InvalidToken {
                line,
                token: token.to_string(),
            })?;
            if label < 1 || label > MAX_VERTICES as i64 {
                return Err(Error::InvalidLabel { line, label });
            }
            let v = label as Vertex;
            if edge.contains(v) {
                return Err(Error::RepeatedVertex { line, vertex: v });
            }
            edge = edge.with(v);
            max_label = max_label.max(v);
        }
        if edges.contains(&edge) {
            return Err(Error::DuplicateLine { line, edge });
        }
        edges.push(edge);
    }
    Hypergraph::new(max_label, edges)
}

/// Emits the edge-list format: one line per edge in canonical order, each
/// line newline-terminated, labels ascending and space-separated. The empty
/// hypergraph emits the empty string. Blank lines are never produced.
pub fn emit_edge_list(h: &Hypergraph) -> String {
    let mut out = String::new();
    for e in h.edges() {
        out.push_str(&e.spaced());
        out.push('\n');
    }
    out
}
