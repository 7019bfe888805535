//! Certificates that a hypergraph needs three colours and loses that need
//! under any single deletion.
//!
//! An edge certificate for `e` is a blue set leaving `e` as the only
//! monochromatic edge: it proves the remaining edges are two-colourable
//! while the whole hypergraph is not (via `e` itself). A vertex certificate
//! for `v` is a proper blue set for the hypergraph with `v` removed. A full
//! bundle of both, one per edge and one per vertex, witnesses every
//! deletion at once and is checkable in linear time per line.

use std::collections::BTreeMap;

use crate::color::{
    chromatic_number, find_2coloring, find_unique_mono_certificate, least_proper_blue,
    monochromatic_edges, TwoColoring,
};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::parallel::par_map;
use crate::vset::{Vertex, VertexSet, MAX_VERTEX};

/// One deletion witness per edge and per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CertificateBundle {
    pub edge_certs: BTreeMap<VertexSet, VertexSet>,
    pub vertex_certs: BTreeMap<Vertex, VertexSet>,
}

/// True iff colouring `blue` blue and the rest red leaves `e` as the one
/// and only monochromatic edge.
pub fn check_edge_cert(h: &Hypergraph, e: VertexSet, blue: VertexSet) -> Result<bool> {
    if !h.is_edge(e) {
        return Err(Error::NotAnEdge(e));
    }
    if !blue.is_subset_of(h.verts()) {
        return Err(Error::NotAVertexSubset(blue));
    }
    Ok(monochromatic_edges(h, &TwoColoring::new(blue)) == vec![e])
}

/// True iff `blue` properly two-colours the hypergraph with `v` deleted.
pub fn check_vertex_cert(h: &Hypergraph, v: Vertex, blue: VertexSet) -> Result<bool> {
    if !h.verts().contains(v) {
        return Err(Error::VertexOutOfRange(v));
    }
    if blue.contains(v) {
        return Err(Error::BlueContainsVertex(v));
    }
    let hv = h.delete_vertex(v).expect("v was just checked");
    if !blue.is_subset_of(hv.verts()) {
        return Err(Error::NotAVertexSubset(blue));
    }
    Ok(monochromatic_edges(&hv, &TwoColoring::new(blue)).is_empty())
}

/// Everything learned while deciding chromatic criticality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub chi: usize,
    pub degrees: BTreeMap<Vertex, usize>,
    pub min_degree: Option<usize>,
    /// Vertices in no edge. Deleting one cannot change colourability, so
    /// their presence alone sinks the verdict; they get no flag below.
    pub isolated: VertexSet,
    /// Per edge: is the hypergraph without it two-colourable?
    pub edge_critical: BTreeMap<VertexSet, bool>,
    /// Per non-isolated vertex: is the hypergraph without it
    /// two-colourable?
    pub vertex_critical: BTreeMap<Vertex, bool>,
    /// Three-chromatic, every flag true, nothing isolated.
    pub verdict: bool,
    /// Present exactly when the verdict holds.
    pub bundle: Option<CertificateBundle>,
}

impl CriticalityReport {
    pub fn all_edges_critical(&self) -> bool {
        self.edge_critical.values().all(|&ok| ok)
    }

    pub fn all_vertices_critical(&self) -> bool {
        self.vertex_critical.values().all(|&ok| ok)
    }
}

/// Decides whether the hypergraph needs three colours critically: chromatic
/// number exactly three, every edge deletion and every non-isolated vertex
/// deletion two-colourable, no isolated vertices at all. A positive verdict
/// comes with the certificate bundle assembled from the witnesses found
/// along the way.
pub fn check_chromatic_critical(h: &Hypergraph) -> Result<CriticalityReport> {
    check_chromatic_critical_jobs(h, 1)
}

/// [`check_chromatic_critical`] with an explicit worker count; results do
/// not depend on `jobs`.
pub fn check_chromatic_critical_jobs(h: &Hypergraph, jobs: usize) -> Result<CriticalityReport> {
    let (chi, _) = chromatic_number(h)?;
    let degrees = h.degrees();
    let min_degree = h.min_degree();
    let isolated = VertexSet::from_vertices(&h.isolated_vertices());

    let edge_recs: Vec<(VertexSet, bool, Option<VertexSet>)> = par_map(jobs, h.edges(), |&e| {
        let hd = h.delete_edge(e).expect("e comes from the edge list");
        let deletion_ok = find_2coloring(&hd).is_some();
        let cert = if chi == 3 {
            let cert = find_unique_mono_certificate(h, e)
                .expect("e comes from the edge list")
                .map(|c| c.blue);
            // at chi = 3 a certificate exists iff the deletion is
            // two-colourable
            debug_assert_eq!(cert.is_some(), deletion_ok);
            cert
        } else {
            None
        };
        (e, deletion_ok, cert)
    });

    let live = h.verts().minus(isolated).to_vec();
    let vertex_recs: Vec<(Vertex, Option<VertexSet>)> = par_map(jobs, &live, |&v| {
        let hv = h.delete_vertex(v).expect("v comes from the vertex set");
        (v, least_proper_blue(&hv))
    });

    let edge_critical: BTreeMap<VertexSet, bool> =
        edge_recs.iter().map(|&(e, ok, _)| (e, ok)).collect();
    let vertex_critical: BTreeMap<Vertex, bool> = vertex_recs
        .iter()
        .map(|&(v, blue)| (v, blue.is_some()))
        .collect();
    let verdict = chi == 3
        && edge_critical.values().all(|&ok| ok)
        && vertex_critical.values().all(|&ok| ok)
        && isolated.is_empty();
    let bundle = if verdict {
        Some(CertificateBundle {
            edge_certs: edge_recs
                .iter()
                .map(|&(e, _, cert)| (e, cert.expect("verdict implies a certificate per edge")))
                .collect(),
            vertex_certs: vertex_recs
                .iter()
                .map(|&(v, blue)| (v, blue.expect("verdict implies a certificate per vertex")))
                .collect(),
        })
    } else {
        None
    };

    Ok(CriticalityReport {
        chi,
        degrees,
        min_degree,
        isolated,
        edge_critical,
        vertex_critical,
        verdict,
        bundle,
    })
}

/// The certificate bundle of a chromatically critical hypergraph, with the
/// lexicographically least blue set for every deletion. Errors when the
/// criticality check fails.
pub fn generate_bundle(h: &Hypergraph) -> Result<CertificateBundle> {
    generate_bundle_jobs(h, 1)
}

/// [`generate_bundle`] with an explicit worker count.
pub fn generate_bundle_jobs(h: &Hypergraph, jobs: usize) -> Result<CertificateBundle> {
    check_chromatic_critical_jobs(h, jobs)?
        .bundle
        .ok_or(Error::NotChromaticCritical)
}

/// Outcome of replaying a bundle against a hypergraph. Bad or missing
/// certificates are recorded, not raised: a verification never errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleVerification {
    /// Per bundle entry, in lexicographic edge order. Entries naming
    /// non-edges count as failures.
    pub edge_results: Vec<(VertexSet, bool)>,
    /// Per bundle entry, in vertex order. Entries naming absent vertices
    /// count as failures.
    pub vertex_results: Vec<(Vertex, bool)>,
    /// Edges of the hypergraph with no certificate in the bundle.
    pub missing_edges: Vec<VertexSet>,
    /// Vertices of the hypergraph with no certificate in the bundle.
    pub missing_vertices: Vec<Vertex>,
    /// Complete coverage and every check true.
    pub pass: bool,
}

/// Replays every certificate in `bundle` against `h` and checks coverage of
/// all edges and all vertices.
pub fn verify_bundle(h: &Hypergraph, bundle: &CertificateBundle) -> BundleVerification {
    let edge_results: Vec<(VertexSet, bool)> = bundle
        .edge_certs
        .iter()
        .map(|(&e, &blue)| (e, check_edge_cert(h, e, blue).unwrap_or(false)))
        .collect();
    let vertex_results: Vec<(Vertex, bool)> = bundle
        .vertex_certs
        .iter()
        .map(|(&v, &blue)| (v, check_vertex_cert(h, v, blue).unwrap_or(false)))
        .collect();
    let missing_edges: Vec<VertexSet> = h
        .edges()
        .iter()
        .filter(|e| !bundle.edge_certs.contains_key(e))
        .copied()
        .collect();
    let missing_vertices: Vec<Vertex> = h
        .verts()
        .iter()
        .filter(|v| !bundle.vertex_certs.contains_key(v))
        .collect();
    let pass = missing_edges.is_empty()
        && missing_vertices.is_empty()
        && edge_results.iter().all(|r| r.1)
        && vertex_results.iter().all(|r| r.1);
    BundleVerification {
        edge_results,
        vertex_results,
        missing_edges,
        missing_vertices,
        pass,
    }
}

/// Reads the line format written by [`emit_bundle`]: `E` followed by the
/// edge, or `V` followed by one vertex, then `:` and the blue set. Order
/// and spacing are free on input; blank lines are skipped.
pub fn parse_bundle(text: &str) -> Result<CertificateBundle> {
    fn parse_label(tok: &str, line: usize) -> Result<Vertex> {
        let n: i64 = tok.parse().map_err(|_| Error::BundleParse {
            line,
            msg: format!("bad token {tok:?}"),
        })?;
        if !(1..=MAX_VERTEX as i64).contains(&n) {
            return Err(Error::BundleParse {
                line,
                msg: format!("label {n} out of range"),
            });
        }
        Ok(n as Vertex)
    }
    fn parse_set(toks: &[&str], line: usize) -> Result<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for t in toks {
            let v = parse_label(t, line)?;
            if s.contains(v) {
                return Err(Error::BundleParse {
                    line,
                    msg: format!("vertex {v} repeated"),
                });
            }
            s = s.with(v);
        }
        Ok(s)
    }

    let mut bundle = CertificateBundle::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let colon = toks
            .iter()
            .position(|t| *t == ":")
            .ok_or(Error::BundleParse {
                line,
                msg: "missing ':'".into(),
            })?;
        let blue = parse_set(&toks[colon + 1..], line)?;
        match toks[0] {
            "E" => {
                let edge = parse_set(&toks[1..colon], line)?;
                if edge.is_empty() {
                    return Err(Error::BundleParse {
                        line,
                        msg: "empty edge".into(),
                    });
                }
                if bundle.edge_certs.insert(edge, blue).is_some() {
                    return Err(Error::BundleParse {
                        line,
                        msg: format!("duplicate certificate for edge {edge}"),
                    });
                }
            }
            "V" => {
                if colon != 2 {
                    return Err(Error::BundleParse {
                        line,
                        msg: "expected exactly one vertex before ':'".into(),
                    });
                }
                let v = parse_label(toks[1], line)?;
                if bundle.vertex_certs.insert(v, blue).is_some() {
                    return Err(Error::BundleParse {
                        line,
                        msg: format!("duplicate certificate for vertex {v}"),
                    });
                }
            }
            other => {
                return Err(Error::BundleParse {
                    line,
                    msg: format!("unknown record {other:?}"),
                });
            }
        }
    }
    Ok(bundle)
}

/// Writes edge certificates in lexicographic edge order, then vertex
/// certificates in vertex order, one per line.
pub fn emit_bundle(bundle: &CertificateBundle) -> String {
    let mut out = String::new();
    let mut push_line = |head: &str, body: String, blue: VertexSet| {
        let mut toks = vec![head.to_string()];
        toks.extend(body.split_whitespace().map(str::to_string));
        toks.push(":".to_string());
        toks.extend(blue.iter().map(|v| v.to_string()));
        out.push_str(&toks.join(" "));
        out.push('\n');
    };
    for (e, &blue) in &bundle.edge_certs {
        push_line("E", e.spaced(), blue);
    }
    for (&v, &blue) in &bundle.vertex_certs {
        push_line("V", v.to_string(), blue);
    }
    out
}
