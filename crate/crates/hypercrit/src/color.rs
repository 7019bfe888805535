//! Weak colourings: a colouring is proper when no edge is monochromatic.
//!
//! Every search here is deterministic. Witness sets are minimal in the
//! ascending-list lexicographic order of [`VertexSet`] (`{} < {2} < {2,3} <
//! {3}`), and `find_2coloring` additionally pins the least vertex red so the
//! blue/red swap symmetry cannot flip the answer. Worst cases are
//! exponential by nature; the viability pruning below makes desk-scale
//! instances instant.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};
use crate::vset::{Vertex, VertexSet};

/// Two-colouring described by its blue class; everything else is red.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoColoring {
    pub blue: VertexSet,
}

impl TwoColoring {
    pub fn new(blue: VertexSet) -> TwoColoring {
        TwoColoring { blue }
    }

    pub fn is_blue(&self, v: Vertex) -> bool {
        self.blue.contains(v)
    }
}

/// Colouring with colours `1..=k`, total on the vertex set it is checked
/// against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KColoring {
    assignment: BTreeMap<Vertex, usize>,
}

impl KColoring {
    pub fn new(assignment: BTreeMap<Vertex, usize>) -> Result<KColoring> {
        if let Some((_, &c)) = assignment.iter().find(|(_, &c)| c == 0) {
            return Err(Error::InvalidColor(c));
        }
        Ok(KColoring { assignment })
    }

    pub fn from_pairs(pairs: &[(Vertex, usize)]) -> Result<KColoring> {
        KColoring::new(pairs.iter().copied().collect())
    }

    pub fn color(&self, v: Vertex) -> Option<usize> {
        self.assignment.get(&v).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<Vertex, usize> {
        &self.assignment
    }

    pub fn colors_used(&self) -> usize {
        let mut cs: Vec<usize> = self.assignment.values().copied().collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }
}

fn is_mono(e: VertexSet, blue: VertexSet) -> bool {
    e.is_subset_of(blue) || !e.intersects(blue)
}

/// Edges monochromatic under `c`, in canonical edge order.
pub fn monochromatic_edges(h: &Hypergraph, c: &TwoColoring) -> Vec<VertexSet> {
    h.edges()
        .iter()
        .copied()
        .filter(|&e| is_mono(e, c.blue))
        .collect()
}

/// True iff `c` is total on the vertex set and every edge sees at least two
/// colours. Errors when some vertex has no colour.
pub fn is_proper(h: &Hypergraph, c: &KColoring) -> Result<bool> {
    for v in h.verts() {
        if c.color(v).is_none() {
            return Err(Error::ColoringNotTotal(v));
        }
    }
    for e in h.edges() {
        let mut it = e.iter();
        let first = c.color(it.next().expect("edges are non-empty")).unwrap();
        if it.all(|v| c.color(v).unwrap() == first) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lexicographically first blue set drawn from `candidates` whose induced
/// two-colouring has monochromatic edge set exactly `target` (`None` means
/// no monochromatic edge at all). Vertices outside `candidates` stay red.
///
/// Depth-first over blue sets in ascending-list order, testing each node
/// before extending it, so the first hit is the least one. A subtree is
/// abandoned when some edge's fate is already sealed: a wrong edge fully
/// blue, a wrong edge all red with no candidate left to fix it, or the
/// target edge stranded between both fates.
pub(crate) fn least_blue(
    edges: &[VertexSet],
    candidates: VertexSet,
    target: Option<VertexSet>,
) -> Option<VertexSet> {
    fn accept(edges: &[VertexSet], target: Option<VertexSet>, blue: VertexSet) -> bool {
        match target {
            None => !edges.iter().any(|&e| is_mono(e, blue)),
            Some(t) => {
                let mut seen_target = false;
                for &e in edges {
                    if is_mono(e, blue) {
                        if e == t {
                            seen_target = true;
                        } else {
                            return false;
                        }
                    }
                }
                seen_target
            }
        }
    }

    // May any completion of `blue` by vertices from `future` still work?
    fn viable(
        edges: &[VertexSet],
        target: Option<VertexSet>,
        blue: VertexSet,
        future: VertexSet,
    ) -> bool {
        for &e in edges {
            if target == Some(e) {
                // Needs to end monochromatic. All red stays possible while
                // blue avoids it; once touched it must be finishable.
                if e.intersects(blue)
                    && !e.is_subset_of(blue)
                    && !e.minus(blue).is_subset_of(future)
                {
                    return false;
                }
            } else {
                if e.is_subset_of(blue) {
                    return false; // stuck fully blue
                }
                if !e.intersects(blue) && !e.intersects(future) {
                    return false; // stuck fully red
                }
            }
        }
        true
    }

    fn dfs(
        edges: &[VertexSet],
        target: Option<VertexSet>,
        blue: VertexSet,
        future: VertexSet,
    ) -> Option<VertexSet> {
        if accept(edges, target, blue) {
            return Some(blue);
        }
        if !viable(edges, target, blue, future) {
            return None;
        }
        for w in future {
            if let Some(hit) = dfs(edges, target, blue.with(w), future.above(w)) {
                return Some(hit);
            }
        }
        None
    }

    dfs(edges, target, VertexSet::EMPTY, candidates)
}

/// Least proper blue set over the whole vertex set, no symmetry pinning.
pub(crate) fn least_proper_blue(h: &Hypergraph) -> Option<VertexSet> {
    least_blue(h.edges(), h.verts(), None)
}

/// Proper two-colouring with the lexicographically least blue set, or
/// `None` when the hypergraph is not two-colourable. The least vertex is
/// pinned red: blue and red swap freely, so only blue sets avoiding it are
/// searched.
pub fn find_2coloring(h: &Hypergraph) -> Option<TwoColoring> {
    let candidates = match h.verts().min_vertex() {
        Some(v) => h.verts().without(v),
        None => VertexSet::EMPTY,
    };
    least_blue(h.edges(), candidates, None).map(TwoColoring::new)
}

/// Smallest `k` admitting a proper `k`-colouring, with the first witness
/// found by backtracking over vertices in label order (colours tried
/// ascending, fresh colours capped at one above the current maximum).
/// `k = 1` iff the hypergraph is edgeless. Errors when no `k` works, i.e.
/// some edge has fewer than two vertices.
pub fn chromatic_number(h: &Hypergraph) -> Result<(usize, KColoring)> {
    let verts: Vec<Vertex> = h.verts().to_vec();
    let cap = verts.len().max(1);
    for k in 1..=cap {
        if let Some(c) = k_color(h, &verts, k) {
            return Ok((k, c));
        }
    }
    Err(Error::NoProperColoring)
}

fn k_color(h: &Hypergraph, verts: &[Vertex], k: usize) -> Option<KColoring> {
    // Each edge is checked exactly once: at its largest vertex, when all of
    // its members have colours.
    let mut edges_at: BTreeMap<Vertex, Vec<VertexSet>> = BTreeMap::new();
    for &e in h.edges() {
        edges_at
            .entry(e.max_vertex().expect("edges are non-empty"))
            .or_default()
            .push(e);
    }

    fn assign(
        verts: &[Vertex],
        edges_at: &BTreeMap<Vertex, Vec<VertexSet>>,
        k: usize,
        idx: usize,
        max_used: usize,
        colors: &mut BTreeMap<Vertex, usize>,
    ) -> bool {
        if idx == verts.len() {
            return true;
        }
        let v = verts[idx];
        let limit = k.min(max_used + 1);
        'colors: for c in 1..=limit {
            colors.insert(v, c);
            if let Some(es) = edges_at.get(&v) {
                for e in es {
                    if e.iter().all(|u| colors[&u] == c) {
                        continue 'colors;
                    }
                }
            }
            if assign(verts, edges_at, k, idx + 1, max_used.max(c), colors) {
                return true;
            }
        }
        colors.remove(&v);
        false
    }

    let mut colors = BTreeMap::new();
    if assign(verts, &edges_at, k, 0, 0, &mut colors) {
        Some(KColoring::new(colors).expect("colours start at 1"))
    } else {
        None
    }
}

/// Exhaustive branch and bound for the largest vertex set containing no
/// edge entirely; candidates are scanned in label order so the first
/// maximum found is the lexicographically least witness, and the
/// remaining-candidate bound only prunes subtrees that cannot beat it.
fn max_independent(edges: &[VertexSet], verts: VertexSet) -> (usize, VertexSet) {
    fn dfs(edges: &[VertexSet], chosen: VertexSet, cand: VertexSet, best: &mut (usize, VertexSet)) {
        if chosen.len() > best.0 {
            *best = (chosen.len(), chosen);
        }
        if chosen.len() + cand.len() <= best.0 {
            return;
        }
        for w in cand {
            let next = chosen.with(w);
            if edges.iter().any(|&e| e.contains(w) && e.is_subset_of(next)) {
                continue;
            }
            dfs(edges, next, cand.above(w), best);
        }
    }

    let mut best = (0, VertexSet::EMPTY);
    dfs(edges, VertexSet::EMPTY, verts, &mut best);
    best
}

/// Independence number with the lexicographically least maximum witness.
pub fn independence_number(h: &Hypergraph) -> (usize, VertexSet) {
    max_independent(h.edges(), h.verts())
}

impl Graph {
    /// Independence number of the graph, over its own vertex set.
    pub fn independence_number(&self) -> (usize, VertexSet) {
        max_independent(self.pairs(), self.verts())
    }
}

/// Lexicographically least blue set whose monochromatic edge set is exactly
/// `[e]`, or `None` when no such colouring exists. Unlike
/// [`find_2coloring`] nothing is pinned: the empty blue set is a valid
/// answer when `e` alone goes red.
pub fn find_unique_mono_certificate(h: &Hypergraph, e: VertexSet) -> Result<Option<TwoColoring>> {
    if !h.is_edge(e) {
        return Err(Error::NotAnEdge(e));
    }
    Ok(least_blue(h.edges(), h.verts(), Some(e)).map(TwoColoring::new))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(vs)
    }

    fn h(n: Vertex, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| vs(e)).collect()).unwrap()
    }

    /// All subsets of `pool` in ascending-list lexicographic order.
    /// Independent of the search code: generates lists recursively.
    fn subsets_lex(pool: &[Vertex]) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY];
        fn extend(pool: &[Vertex], from: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
            for i in from..pool.len() {
                let next = cur.with(pool[i]);
                out.push(next);
                extend(pool, i + 1, next, out);
            }
        }
        extend(pool, 0, VertexSet::EMPTY, &mut out);
        out
    }

    fn brute_least_blue(
        h: &Hypergraph,
        candidates: VertexSet,
        target: Option<VertexSet>,
    ) -> Option<VertexSet> {
        for blue in subsets_lex(&candidates.to_vec()) {
            let mono = monochromatic_edges(h, &TwoColoring::new(blue));
            let ok = match target {
                None => mono.is_empty(),
                Some(t) => mono == vec![t],
            };
            if ok {
                return Some(blue);
            }
        }
        None
    }

    #[test]
    fn subsets_lex_is_sorted() {
        let all = subsets_lex(&[2, 3, 5]);
        assert_eq!(all.len(), 8);
        for w in all.windows(2) {
            assert!(w[0] < w[1], "{} !< {}", w[0], w[1]);
        }
    }

    #[test]
    fn monochromatic_edges_basics() {
        let g = h(4, &[&[1, 2, 3], &[2, 3, 4]]);
        // everything blue: every edge is monochromatic, in edge order
        let all = TwoColoring::new(vs(&[1, 2, 3, 4]));
        assert_eq!(
            monochromatic_edges(&g, &all),
            vec![vs(&[1, 2, 3]), vs(&[2, 3, 4])]
        );
        // a proper split
        let c = TwoColoring::new(vs(&[2]));
        assert!(monochromatic_edges(&g, &c).is_empty());
        // one edge all red
        let c = TwoColoring::new(vs(&[4]));
        assert_eq!(monochromatic_edges(&g, &c), vec![vs(&[1, 2, 3])]);
    }

    #[test]
    fn is_proper_checks_totality_and_edges() {
        let g = h(3, &[&[1, 2, 3]]);
        let good = KColoring::from_pairs(&[(1, 1), (2, 1), (3, 2)]).unwrap();
        assert!(is_proper(&g, &good).unwrap());
        let constant = KColoring::from_pairs(&[(1, 1), (2, 1), (3, 1)]).unwrap();
        assert!(!is_proper(&g, &constant).unwrap());
        let partial = KColoring::from_pairs(&[(1, 1), (2, 2)]).unwrap();
        assert_eq!(is_proper(&g, &partial), Err(Error::ColoringNotTotal(3)));
        // edgeless: any total colouring is proper
        let empty = h(2, &[]);
        let c = KColoring::from_pairs(&[(1, 1), (2, 1)]).unwrap();
        assert!(is_proper(&empty, &c).unwrap());
    }

    #[test]
    fn kcoloring_rejects_colour_zero() {
        assert!(KColoring::from_pairs(&[(1, 0)]).is_err());
    }

    #[test]
    fn find_2coloring_single_edge() {
        let g = h(3, &[&[1, 2, 3]]);
        // vertex 1 is pinned red, so the least blue set is {2}
        assert_eq!(find_2coloring(&g), Some(TwoColoring::new(vs(&[2]))));
    }

    #[test]
    fn find_2coloring_agrees_with_brute_force() {
        // a grab bag of small instances, including 2-uniform odd cycles
        let cases = vec![
            h(3, &[&[1, 2, 3]]),
            h(5, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 5], &[3, 4, 5]]),
            h(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]),
            h(4, &[&[1, 2], &[2, 3], &[1, 3]]),
            h(6, &[&[1, 2, 3], &[4, 5, 6]]),
            h(0, &[]),
            h(4, &[]),
        ];
        for g in cases {
            let cands = match g.verts().min_vertex() {
                Some(v) => g.verts().without(v),
                None => VertexSet::EMPTY,
            };
            let expect = brute_least_blue(&g, cands, None);
            assert_eq!(find_2coloring(&g).map(|c| c.blue), expect, "on {g:?}");
        }
    }

    #[test]
    fn find_2coloring_blue_and_red_classes_are_independent() {
        let g = h(5, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 5], &[3, 4, 5]]);
        let c = find_2coloring(&g).unwrap();
        let red = g.verts().minus(c.blue);
        for &e in g.edges() {
            assert!(!e.is_subset_of(c.blue));
            assert!(!e.is_subset_of(red));
        }
    }

    #[test]
    fn odd_cycle_needs_three_colours() {
        let g = h(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        assert!(find_2coloring(&g).is_none());
        let (k, c) = chromatic_number(&g).unwrap();
        assert_eq!(k, 3);
        assert!(is_proper(&g, &c).unwrap());
    }

    #[test]
    fn chromatic_number_edge_cases() {
        // edgeless (even with no vertices): one colour
        assert_eq!(chromatic_number(&h(0, &[])).unwrap().0, 1);
        assert_eq!(chromatic_number(&h(3, &[])).unwrap().0, 1);
        // a single edge: two colours
        let (k, c) = chromatic_number(&h(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(k, 2);
        assert!(is_proper(&h(3, &[&[1, 2, 3]]), &c).unwrap());
        // an edge with one vertex can never be non-monochromatic
        assert_eq!(
            chromatic_number(&h(2, &[&[1]])),
            Err(Error::NoProperColoring)
        );
    }

    #[test]
    fn chromatic_number_drops_by_at_most_one_per_edge() {
        let g = h(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let (k, _) = chromatic_number(&g).unwrap();
        for &e in g.edges() {
            let (kd, _) = chromatic_number(&g.delete_edge(e).unwrap()).unwrap();
            assert!(kd == k || kd + 1 == k);
        }
    }

    #[test]
    fn independence_number_basics() {
        // edgeless: everything is independent, witness is the whole set
        let empty = h(4, &[]);
        assert_eq!(independence_number(&empty), (4, vs(&[1, 2, 3, 4])));
        // a triangle (2-uniform): alpha = 1
        let tri = h(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(independence_number(&tri), (1, vs(&[1])));
        // 3-uniform: a set is dependent only when it swallows a whole edge
        let g = h(4, &[&[1, 2, 3]]);
        assert_eq!(independence_number(&g), (3, vs(&[1, 2, 4])));
        // no vertices at all
        assert_eq!(independence_number(&h(0, &[])), (0, VertexSet::EMPTY));
    }

    #[test]
    fn independence_number_agrees_with_brute_force() {
        let cases = vec![
            h(5, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 5], &[3, 4, 5]]),
            h(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]),
            h(6, &[&[1, 2, 3], &[4, 5, 6], &[1, 3, 5]]),
        ];
        for g in cases {
            let mut best = (0, VertexSet::EMPTY);
            for s in subsets_lex(&g.verts().to_vec()) {
                let independent = !g.edges().iter().any(|e| e.is_subset_of(s));
                if independent && s.len() > best.0 {
                    best = (s.len(), s);
                }
            }
            assert_eq!(independence_number(&g), best, "on {g:?}");
        }
    }

    #[test]
    fn graph_independence_uses_the_graph_vertex_set() {
        // path 2-3-4 living inside labels {2,3,4}: alpha = 2
        let g = Graph::new(vs(&[2, 3, 4]), vec![vs(&[2, 3]), vs(&[3, 4])]).unwrap();
        assert_eq!(g.independence_number(), (2, vs(&[2, 4])));
    }

    #[test]
    fn unique_mono_certificate_single_edge() {
        let g = h(3, &[&[1, 2, 3]]);
        // the empty blue set leaves the single edge red-monochromatic
        let c = find_unique_mono_certificate(&g, vs(&[1, 2, 3])).unwrap();
        assert_eq!(c, Some(TwoColoring::new(VertexSet::EMPTY)));
        assert_eq!(
            find_unique_mono_certificate(&g, vs(&[1, 2])),
            Err(Error::NotAnEdge(vs(&[1, 2])))
        );
    }

    #[test]
    fn unique_mono_certificate_agrees_with_brute_force() {
        let cases = vec![
            h(5, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 5], &[3, 4, 5]]),
            h(6, &[&[1, 2, 3], &[4, 5, 6], &[1, 3, 5], &[2, 4, 6]]),
            h(4, &[&[1, 2], &[2, 3], &[1, 3], &[3, 4]]),
        ];
        for g in cases {
            for &e in g.edges() {
                let expect = brute_least_blue(&g, g.verts(), Some(e));
                let got = find_unique_mono_certificate(&g, e).unwrap().map(|c| c.blue);
                assert_eq!(got, expect, "edge {e} of {g:?}");
                if let Some(blue) = got {
                    let mono = monochromatic_edges(&g, &TwoColoring::new(blue));
                    assert_eq!(mono, vec![e]);
                }
            }
        }
    }

    #[test]
    fn unique_mono_certificate_absent_when_deletion_stays_uncolourable() {
        // seven projective lines plus one spare triple: deleting the spare
        // leaves the uncolourable line system, so no colouring can isolate it
        let mut edges = crate::corpus::fano_plane().edges().to_vec();
        let spare = vs(&[1, 2, 4]);
        edges.push(spare);
        let g = Hypergraph::new(7, edges).unwrap();
        assert_eq!(find_unique_mono_certificate(&g, spare), Ok(None));
    }

    #[test]
    fn color_swap_leaves_monochromatic_edges_unchanged() {
        let g = h(5, &[&[1, 2, 3], &[2, 4, 5], &[1, 3, 5]]);
        for blue in subsets_lex(&g.verts().to_vec()) {
            let a = monochromatic_edges(&g, &TwoColoring::new(blue));
            let b = monochromatic_edges(&g, &TwoColoring::new(g.verts().minus(blue)));
            assert_eq!(a, b);
        }
    }
}
