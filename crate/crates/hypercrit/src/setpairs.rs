//! Cross-intersecting set-pair systems and the fractional bound on their
//! size.
//!
//! A system of pairs `(A_i, B_i)` is cross-intersecting when each `A_i` is
//! disjoint from its own `B_i` but meets every other `B_j`. For such a
//! system the weights `1 / C(|A_i| + |B_i|, |A_i|)` sum to at most one; all
//! arithmetic here is exact rational, never floating point.
//!
//! [`permutation_event_audit`] re-derives the inequality from first
//! principles on small ground sets: for a uniformly random ordering of the
//! ground vertices, the event "all of `A_i` comes before all of `B_i`" has
//! probability exactly `1 / C(|A_i| + |B_i|, |A_i|)`, and cross-intersection
//! forces these events to be pairwise disjoint.
//!
//! Every transversal-critical hypergraph yields such a system: pair each
//! edge with a small transversal of the remaining edges
//! ([`extract_setpair_system`]). The weights are then equal and the
//! inequality caps the number of edges ([`edge_bound`]).

use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::transversal::{check_tau_critical, TauCriticalVerdict};
use crate::vset::VertexSet;

/// Exact rational arithmetic for the weight sums.
pub type ExactRational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetPair {
    pub a: VertexSet,
    pub b: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SetPairSystem {
    pairs: Vec<SetPair>,
}

impl SetPairSystem {
    pub fn new(pairs: Vec<SetPair>) -> Self {
        SetPairSystem { pairs }
    }

    pub fn pairs(&self) -> &[SetPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Union of all member sets.
    pub fn ground(&self) -> VertexSet {
        self.pairs
            .iter()
            .fold(VertexSet::EMPTY, |g, p| g.union(p.a).union(p.b))
    }
}

/// `A_i` disjoint from `B_i`, and `A_i` meets `B_j` whenever `i != j`.
pub fn verify_cross_intersecting(sys: &SetPairSystem) -> bool {
    let ps = sys.pairs();
    for (i, p) in ps.iter().enumerate() {
        if p.a.intersects(p.b) {
            return false;
        }
        for (j, q) in ps.iter().enumerate() {
            if i != j && !p.a.intersects(q.b) {
                return false;
            }
        }
    }
    true
}

/// Exact binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    c
}

/// `sum_i 1 / C(|A_i| + |B_i|, |A_i|)`, exactly.
pub fn bollobas_sum(sys: &SetPairSystem) -> ExactRational {
    sys.pairs()
        .iter()
        .map(|p| {
            let c = binomial((p.a.len() + p.b.len()) as u64, p.a.len() as u64);
            ExactRational::new(BigInt::one(), BigInt::from(c))
        })
        .fold(ExactRational::zero(), |acc, t| acc + t)
}

/// Largest possible edge count of an `r`-uniform transversal-critical
/// hypergraph of order `t`: `C(r + t - 1, r)`. Panics if the value does not
/// fit in a `u64`.
pub fn edge_bound(r: u64, t: u64) -> u64 {
    let c = binomial(r + t - 1, r);
    u64::try_from(&c).unwrap_or_else(|_| panic!("edge bound {c} exceeds u64"))
}

/// Pairs each edge of a transversal-critical 3-uniform hypergraph of order
/// three with the lexicographically least blocker that survives deleting
/// it. Errors unless the hypergraph really is critical.
pub fn extract_setpair_system(h: &Hypergraph) -> Result<SetPairSystem> {
    let verdict = check_tau_critical(h, 3, 3)?;
    setpair_system_from_verdict(&verdict)
}

/// Same extraction when a criticality verdict is already in hand.
pub fn setpair_system_from_verdict(verdict: &TauCriticalVerdict) -> Result<SetPairSystem> {
    if !verdict.is_critical {
        return Err(Error::NotTauCritical(verdict.t));
    }
    let pairs = verdict
        .per_edge
        .iter()
        .map(|d| SetPair {
            a: d.edge,
            b: d.blocker
                .expect("critical verdicts carry a blocker per edge"),
        })
        .collect();
    let sys = SetPairSystem::new(pairs);
    // guaranteed by criticality: a small transversal of H - e cannot touch
    // e, and it must hit every other edge
    if !verify_cross_intersecting(&sys) {
        return Err(Error::NotCrossIntersecting);
    }
    Ok(sys)
}

/// Ground sets larger than this make the factorial enumeration in
/// [`permutation_event_audit`] unreasonable.
pub const AUDIT_GROUND_CAP: usize = 9;

/// Exhaustive check of the probabilistic argument behind the weight bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationAudit {
    pub ground: VertexSet,
    /// `|ground|!`, the number of orderings inspected.
    pub total: u64,
    /// One entry per pair, in system order.
    pub events: Vec<PairEvent>,
    /// No ordering realises two events at once.
    pub pairwise_disjoint: bool,
    /// Orderings realising at least one event.
    pub covered: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairEvent {
    /// Orderings placing all of `A_i` before all of `B_i`.
    pub count: u64,
    /// Whether `count * C(|A_i| + |B_i|, |A_i|)` equals `total`.
    pub exact: bool,
}

/// Walks every ordering of the ground set and counts, per pair, the
/// orderings in which all of `A_i` precedes all of `B_i`. For a
/// cross-intersecting system the counts must be exact binomial shares of
/// the total and no ordering may be counted twice.
pub fn permutation_event_audit(sys: &SetPairSystem) -> Result<PermutationAudit> {
    if !verify_cross_intersecting(sys) {
        return Err(Error::NotCrossIntersecting);
    }
    let ground = sys.ground();
    if ground.len() > AUDIT_GROUND_CAP {
        return Err(Error::GroundTooLarge {
            size: ground.len(),
            cap: AUDIT_GROUND_CAP,
        });
    }
    let elems = ground.to_vec();
    let mut counts = vec![0u64; sys.len()];
    let mut covered = 0u64;
    let mut disjoint = true;
    let mut total = 0u64;

    // pos[v] = position of vertex v in the current ordering
    fn walk(
        elems: &[u32],
        used: u32,
        depth: usize,
        pos: &mut [usize; 31],
        visit: &mut impl FnMut(&[usize; 31]),
    ) {
        if depth == elems.len() {
            visit(pos);
            return;
        }
        for (i, &v) in elems.iter().enumerate() {
            if used & (1 << i) == 0 {
                pos[v as usize] = depth;
                walk(elems, used | (1 << i), depth + 1, pos, visit);
            }
        }
    }

    let mut pos = [0usize; 31];
    walk(&elems, 0, 0, &mut pos, &mut |pos| {
        total += 1;
        let mut fired = 0usize;
        for (i, p) in sys.pairs().iter().enumerate() {
            let amax = p.a.iter().map(|v| pos[v as usize]).max();
            let bmin = p.b.iter().map(|v| pos[v as usize]).min();
            let happens = match (amax, bmin) {
                (Some(x), Some(y)) => x < y,
                // an empty side makes the event vacuous
                _ => true,
            };
            if happens {
                counts[i] += 1;
                fired += 1;
            }
        }
        if fired > 1 {
            disjoint = false;
        }
        if fired > 0 {
            covered += 1;
        }
    });

    let events = sys
        .pairs()
        .iter()
        .zip(&counts)
        .map(|(p, &count)| {
            let c = binomial((p.a.len() + p.b.len()) as u64, p.a.len() as u64);
            PairEvent {
                count,
                exact: BigUint::from(count) * c == BigUint::from(total),
            }
        })
        .collect();

    Ok(PermutationAudit {
        ground,
        total,
        events,
        pairwise_disjoint: disjoint,
        covered,
    })
}
