//! Built-in instances: the nine-vertex example, complete uniform
//! hypergraphs, and the Fano plane.
//!
//! The nine-vertex hypergraph and its certificate bundle are compiled in
//! from `data/`, so the shipped files can never drift from what the library
//! serves.

use crate::error::{Error, Result};
use crate::hypergraph::{parse_edge_list, Hypergraph};
use crate::vset::{Vertex, VertexSet, MAX_VERTEX};

/// Shipped edge list of the nine-vertex example, one edge per line.
pub const H9_EDGE_LIST: &str = include_str!("../../../data/h9_edges.txt");

/// Shipped deletion certificates for the nine-vertex example: 22 edge
/// entries and 9 vertex entries.
pub const H9_CERT_BUNDLE: &str = include_str!("../../../data/h9_certs.txt");

/// The nine-vertex, 22-edge, 3-uniform hypergraph that needs three colours
/// but drops to two under any single edge or vertex deletion. Vertex 1 sits
/// in ten edges; every other vertex in seven.
pub fn builtin_h9() -> Hypergraph {
    parse_edge_list(H9_EDGE_LIST).expect("shipped edge list is well-formed")
}

/// All `r`-subsets of `{1..n}`.
pub fn complete_uniform(n: Vertex, r: usize) -> Result<Hypergraph> {
    if r < 1 || r > n as usize || n > MAX_VERTEX {
        return Err(Error::UniformBounds { n, r });
    }
    let mut edges = Vec::new();
    fn rec(n: Vertex, from: Vertex, left: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for v in from..=n {
            rec(n, v + 1, left - 1, cur.with(v), out);
        }
    }
    rec(n, 1, r, VertexSet::EMPTY, &mut edges);
    Hypergraph::new(n, edges)
}

/// The seven-point projective plane as a 3-uniform hypergraph: 7 triples on
/// {1..7}, every vertex in exactly three, any two triples sharing exactly
/// one point. The classic small instance that no two colours can handle.
pub fn fano_plane() -> Hypergraph {
    let triples = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ];
    let edges = triples
        .iter()
        .map(|t| VertexSet::from_vertices(t))
        .collect();
    Hypergraph::new(7, edges).expect("construction is valid")
}

/// A named instance from the built-in corpus.
pub struct Fixture {
    pub name: &'static str,
    pub hypergraph: Hypergraph,
    /// Where the instance comes from, for humans reading reports.
    pub provenance: &'static str,
}

/// Every built-in instance, in stable order. Names are unique.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "h9",
            hypergraph: builtin_h9(),
            provenance: "nine-vertex 3-uniform example, critically 3-chromatic, min degree 7",
        },
        Fixture {
            name: "k5_3",
            hypergraph: complete_uniform(5, 3).expect("5 and 3 are in bounds"),
            provenance: "complete 3-uniform hypergraph on five vertices, extremal transversal-critical instance",
        },
        Fixture {
            name: "fano",
            hypergraph: fano_plane(),
            provenance: "Fano plane, the classical minimal non-2-colourable triple system",
        },
    ]
}

/// Look up a built-in instance by name.
pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::emit_edge_list;

    #[test]
    fn h9_matches_its_shipped_listing() {
        let h = builtin_h9();
        assert_eq!(h.vertex_count(), 9);
        assert_eq!(h.edge_count(), 22);
        assert!(h.is_uniform(3));
        assert_eq!(emit_edge_list(&h), H9_EDGE_LIST);
        // canonical order puts the ten edges through vertex 1 first
        assert!(h.edges()[..10].iter().all(|e| e.contains(1)));
        assert!(h.edges()[10..].iter().all(|e| !e.contains(1)));
    }

    #[test]
    fn h9_certificates_parse() {
        let bundle = crate::certify::parse_bundle(H9_CERT_BUNDLE).unwrap();
        assert_eq!(bundle.edge_certs.len(), 22);
        assert_eq!(bundle.vertex_certs.len(), 9);
    }

    #[test]
    fn complete_uniform_counts() {
        assert_eq!(complete_uniform(5, 3).unwrap().edge_count(), 10);
        assert_eq!(complete_uniform(4, 3).unwrap().edge_count(), 4);
        assert_eq!(complete_uniform(3, 3).unwrap().edge_count(), 1);
        assert_eq!(complete_uniform(4, 2).unwrap().edge_count(), 6);
        let k53 = complete_uniform(5, 3).unwrap();
        assert!(k53.degrees().values().all(|&d| d == 6));
    }

    #[test]
    fn complete_uniform_bounds() {
        assert_eq!(
            complete_uniform(5, 0),
            Err(Error::UniformBounds { n: 5, r: 0 })
        );
        assert_eq!(
            complete_uniform(3, 4),
            Err(Error::UniformBounds { n: 3, r: 4 })
        );
        assert_eq!(
            complete_uniform(31, 2),
            Err(Error::UniformBounds { n: 31, r: 2 })
        );
        assert_eq!(
            complete_uniform(0, 1),
            Err(Error::UniformBounds { n: 0, r: 1 })
        );
    }

    #[test]
    fn fano_is_a_projective_plane() {
        let f = fano_plane();
        assert_eq!(f.edge_count(), 7);
        assert!(f.is_uniform(3));
        assert!(f.degrees().values().all(|&d| d == 3));
        for (i, a) in f.edges().iter().enumerate() {
            for b in &f.edges()[i + 1..] {
                assert_eq!(a.intersection(*b).len(), 1, "{a} and {b}");
            }
        }
    }

    #[test]
    fn fixture_lookup() {
        let all = fixtures();
        assert_eq!(all.len(), 3);
        let mut names: Vec<_> = all.iter().map(|f| f.name).collect();
        names.dedup();
        assert_eq!(names.len(), all.len());
        assert_eq!(fixture("h9").unwrap().hypergraph.edge_count(), 22);
        assert_eq!(fixture("k5_3").unwrap().hypergraph.edge_count(), 10);
        assert_eq!(fixture("fano").unwrap().hypergraph.edge_count(), 7);
        assert!(fixture("petersen").is_none());
    }
}
