//! Transversals (hitting sets) and transversal-criticality checks.
//!
//! The transversal number is found by exhaustive search over candidate
//! sizes 0, 1, 2, …; a size is skipped outright when `s * max_degree` cannot
//! reach the edge count. Witnesses are lexicographically least in
//! ascending-list order.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::parallel::par_map;
use crate::vset::VertexSet;

/// True iff every edge meets `t`. Errors when `t` is not a subset of the
/// vertex set.
pub fn is_transversal(h: &Hypergraph, t: VertexSet) -> Result<bool> {
    if !t.is_subset_of(h.verts()) {
        return Err(Error::NotAVertexSubset(t));
    }
    Ok(h.edges().iter().all(|e| e.intersects(t)))
}

/// Lexicographically first transversal with at most `cap` vertices, walking
/// subsets in ascending-list order (so `{}` then `{1}` then `{1,2}` … then
/// `{2}` …). A branch dies when some unhit edge has no remaining candidate.
fn least_transversal_up_to(edges: &[VertexSet], verts: VertexSet, cap: usize) -> Option<VertexSet> {
    fn dfs(
        edges: &[VertexSet],
        chosen: VertexSet,
        future: VertexSet,
        cap: usize,
    ) -> Option<VertexSet> {
        if edges.iter().all(|e| e.intersects(chosen)) {
            return Some(chosen);
        }
        if chosen.len() == cap {
            return None;
        }
        if edges
            .iter()
            .any(|e| !e.intersects(chosen) && !e.intersects(future))
        {
            return None;
        }
        for w in future {
            if let Some(t) = dfs(edges, chosen.with(w), future.above(w), cap) {
                return Some(t);
            }
        }
        None
    }

    dfs(edges, VertexSet::EMPTY, verts, cap)
}

/// Transversal number plus the lexicographically least minimum witness.
/// `tau = 0` iff the hypergraph is edgeless.
pub fn transversal_number(h: &Hypergraph) -> (usize, VertexSet) {
    let delta = h.max_degree().unwrap_or(0);
    let m = h.edge_count();
    for s in 0..=h.vertex_count() {
        // s vertices hit at most s * delta edges
        if s.saturating_mul(delta) < m {
            continue;
        }
        if let Some(t) = least_transversal_up_to(h.edges(), h.verts(), s) {
            return (t.len(), t);
        }
    }
    unreachable!("the full vertex set is a transversal of every hypergraph")
}

/// Lexicographically least set of at most two vertices meeting every edge
/// of `H - e`, or `None` when the deletion still needs three. Note the
/// order is over the whole family of small sets: `{1,5}` beats `{2}`.
pub fn find_blocker_pair(h: &Hypergraph, e: VertexSet) -> Result<Option<VertexSet>> {
    let hd = h.delete_edge(e)?;
    Ok(least_transversal_up_to(hd.edges(), hd.verts(), 2))
}

/// Outcome of a transversal-criticality check of order `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauCriticalVerdict {
    pub r: usize,
    pub t: usize,
    pub tau: usize,
    pub tau_witness: VertexSet,
    /// One record per edge, in canonical edge order.
    pub per_edge: Vec<EdgeDeletion>,
    pub is_critical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDeletion {
    pub edge: VertexSet,
    pub tau_after: usize,
    /// Least transversal of `H - e` with at most `t - 1` vertices, when one
    /// exists.
    pub blocker: Option<VertexSet>,
}

/// Checks that an `r`-uniform hypergraph has transversal number exactly `t`
/// and that deleting any single edge drops it below `t`. Each deletion is
/// recomputed from scratch (independently, so the per-edge work may run on
/// several threads via [`check_tau_critical_jobs`]).
pub fn check_tau_critical(h: &Hypergraph, r: usize, t: usize) -> Result<TauCriticalVerdict> {
    check_tau_critical_jobs(h, r, t, 1)
}

/// [`check_tau_critical`] with an explicit worker count; results do not
/// depend on `jobs`.
pub fn check_tau_critical_jobs(
    h: &Hypergraph,
    r: usize,
    t: usize,
    jobs: usize,
) -> Result<TauCriticalVerdict> {
    if !h.is_uniform(r) {
        return Err(Error::NotUniform(r));
    }
    let (tau, tau_witness) = transversal_number(h);
    let per_edge = par_map(jobs, h.edges(), |&edge| {
        let hd = h.delete_edge(edge).expect("edge comes from the edge list");
        let (tau_after, _) = transversal_number(&hd);
        let blocker = if t >= 1 {
            least_transversal_up_to(hd.edges(), hd.verts(), t - 1)
        } else {
            None
        };
        EdgeDeletion {
            edge,
            tau_after,
            blocker,
        }
    });
    let is_critical = tau == t && per_edge.iter().all(|d| d.tau_after < t);
    Ok(TauCriticalVerdict {
        r,
        t,
        tau,
        tau_witness,
        per_edge,
        is_critical,
    })
}
