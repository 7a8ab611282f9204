//! Homogeneous sets, substitution, and the decomposition of a graph around an
//! induced five-cycle.

mod claims;
mod decomposition;

pub use claims::{audit_claims, ClaimAuditor, ClaimReport, ClaimResult, ClaimStatus, ASSUME_CLASS_CLAIMS, CLAIM_COUNT};
pub use decomposition::{c5_partition, C5Decomposition};

use crate::detect::induced_c5s;
use crate::error::{Error, Result};
use crate::graph::{Graph, NamedGraph, VertexSet, MAX_ORDER};

/// Order limit for [`all_homogeneous_sets`].
pub const HOMOGENEOUS_ORDER_LIMIT: usize = 20;

/// The smallest homogeneous set containing `x`.
pub fn homogeneous_closure(g: &Graph, x: VertexSet) -> VertexSet {
    let mut x = x;
    loop {
        let splitter = g.vertices().difference(x).iter().find(|&v| {
            let hit = g.neighbours(v).intersection(x);
            !hit.is_empty() && hit != x
        });
        match splitter {
            Some(v) => x.insert(v),
            None => return x,
        }
    }
}

/// Inclusion-maximal nontrivial homogeneous sets, sorted by bitset.
///
/// If `g` is disconnected these are the complements of its components (when
/// they have at least two vertices), likewise for the complement of `g`.
/// Otherwise they partition `V(g)`, and the one containing `v` is the union of
/// the closures of `{v, u}` that stay proper.
pub fn homogeneous_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    if n < 3 {
        return Vec::new();
    }
    let all = g.vertices();
    let mut out = Vec::new();
    let comps = g.components(all);
    let co = g.complement();
    let co_comps = co.components(all);
    if comps.len() > 1 || co_comps.len() > 1 {
        let parts = if comps.len() > 1 { comps } else { co_comps };
        for c in parts {
            let rest = all.difference(c);
            if rest.len() >= 2 {
                out.push(rest);
            }
        }
    } else {
        let mut covered = VertexSet::EMPTY;
        for v in 0..n {
            if covered.contains(v) {
                continue;
            }
            let mut m = VertexSet::singleton(v);
            for u in 0..n {
                if u != v {
                    let c = homogeneous_closure(g, VertexSet::from_iter([u, v]));
                    if c != all {
                        m = m.union(c);
                    }
                }
            }
            covered = covered.union(m);
            if m.len() >= 2 {
                out.push(m);
            }
        }
    }
    out.sort_by_key(|s| s.bits());
    out.dedup();
    out
}

/// Every nontrivial homogeneous set, by brute force over all subsets.
pub fn all_homogeneous_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n > HOMOGENEOUS_ORDER_LIMIT {
        return Err(Error::OrderTooLarge { order: n, max: HOMOGENEOUS_ORDER_LIMIT });
    }
    let mut out = Vec::new();
    for bits in 0u64..1 << n {
        let s = VertexSet(bits);
        let k = s.len();
        if k >= 2 && k < n && g.is_homogeneous(s) {
            out.push(s);
        }
    }
    Ok(out)
}

pub fn is_nontrivial_homogeneous(g: &Graph, s: VertexSet) -> bool {
    s.is_subset(g.vertices()) && s.len() >= 2 && s.len() < g.order() && g.is_homogeneous(s)
}

/// Homogeneous sets inducing a five-cycle, sorted by bitset.
pub fn homogeneous_c5s(g: &Graph) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = induced_c5s(g)
        .into_iter()
        .map(|q| q.iter().copied().collect::<VertexSet>())
        .filter(|&s| is_nontrivial_homogeneous(g, s))
        .collect();
    out.sort_by_key(|s| s.bits());
    out
}

/// Homogeneous triangles, sorted by bitset.
pub fn homogeneous_triangles(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in g.neighbours(a).iter().filter(|&b| b > a) {
            for c in g.neighbours(a).intersection(g.neighbours(b)).iter().filter(|&c| c > b) {
                let s = VertexSet::from_iter([a, b, c]);
                if is_nontrivial_homogeneous(g, s) {
                    out.push(s);
                }
            }
        }
    }
    out.sort_by_key(|s| s.bits());
    out
}

/// Replaces the homogeneous set `s` of `g1` by a copy of `g2`.
///
/// The result lists the vertices of `V(g1) \ s` first, in their original
/// order, followed by the vertices of `g2`.
pub fn substitute(g1: &Graph, s: VertexSet, g2: &Graph) -> Result<Graph> {
    if s.is_empty() || !s.is_subset(g1.vertices()) {
        return Err(Error::NotHomogeneous(format!("{s:?} is empty or out of range")));
    }
    if !g1.is_homogeneous(s) {
        return Err(Error::NotHomogeneous(format!("{s:?} is not homogeneous")));
    }
    let keep: Vec<usize> = g1.vertices().difference(s).to_vec();
    let n = keep.len() + g2.order();
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
    }
    let base = keep.len();
    let mut h = Graph::empty(n)?;
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            if g1.has_edge(u, v) {
                h.add_edge(i, j);
            }
        }
        if s.is_subset(g1.neighbours(u)) {
            for j in 0..g2.order() {
                h.add_edge(i, base + j);
            }
        }
    }
    for (a, b) in g2.edges() {
        h.add_edge(base + a, base + b);
    }
    Ok(h)
}

/// One round of [`reduce_homogeneous_c5`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// The homogeneous five-cycle that was replaced, in the labels of the
    /// graph before the step.
    pub replaced: VertexSet,
    pub result: Graph,
}

/// Replaces homogeneous five-cycles by triangles until none is left, always
/// taking the one with the least vertex set.
pub fn reduce_homogeneous_c5(g: &Graph) -> (Graph, usize) {
    let (h, steps) = reduce_homogeneous_c5_steps(g);
    (h, steps.len())
}

pub fn reduce_homogeneous_c5_steps(g: &Graph) -> (Graph, Vec<ReductionStep>) {
    let k3 = NamedGraph::Complete(3).build().expect("k3");
    let mut cur = g.clone();
    let mut steps = Vec::new();
    while let Some(&s) = homogeneous_c5s(&cur).iter().min_by(|a, b| a.to_vec().cmp(&b.to_vec())) {
        cur = substitute(&cur, s, &k3).expect("homogeneous by construction");
        steps.push(ReductionStep { replaced: s, result: cur.clone() });
    }
    (cur, steps)
}

/// Replaces a homogeneous triangle by a five-cycle.
pub fn expand_k3_to_c5(g: &Graph, s: VertexSet) -> Result<Graph> {
    if s.len() != 3 || !s.is_subset(g.vertices()) || !g.is_clique(s) {
        return Err(Error::NotHomogeneous(format!("{s:?} does not induce a triangle")));
    }
    if !g.is_homogeneous(s) {
        return Err(Error::NotHomogeneous(format!("{s:?} is not homogeneous")));
    }
    substitute(g, s, &NamedGraph::Cycle(5).build()?)
}
