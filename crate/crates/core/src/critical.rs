//! Vertex-criticality and the structural conditions every vertex-critical
//! graph satisfies.
//!
//! "Comparable" is read with open neighbourhoods: distinct `u`, `v` with
//! `N(u) ⊆ N(v)`. Under that reading adjacent vertices are never comparable,
//! so a comparable pair is always nonadjacent. [`closed_comparable_pair`] gives
//! the closed-neighbourhood variant, which also matches adjacent twins.

use crate::colour::{chromatic_number, is_k_colourable};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Cap used by [`is_k_vertex_critical`] for its anticomplete-pair search.
pub const DEFAULT_LEMMA3_CAP: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructuralViolation {
    Disconnected,
    CliqueCutset(VertexSet),
    /// `N(u) ⊆ N(v)`.
    ComparablePair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub is_critical: bool,
    pub chi: usize,
    /// A vertex whose deletion leaves the chromatic number unchanged.
    pub failing_vertex: Option<usize>,
    pub lemma2_violation: Option<StructuralViolation>,
    /// Disjoint `(X, Y)` with `X` anticomplete to `Y`, `χ(X) ≤ χ(Y)` and `Y`
    /// complete to `N(X)`, searched up to [`DEFAULT_LEMMA3_CAP`].
    pub lemma3_violation: Option<(VertexSet, VertexSet)>,
}

/// Full report. `is_critical` holds iff `χ(g) = k` and every single-vertex
/// deletion is `(k-1)`-colourable.
pub fn is_k_vertex_critical(g: &Graph, k: usize) -> CriticalityReport {
    let chi = chromatic_number(g);
    let failing_vertex = if chi == 0 {
        None
    } else {
        (0..g.order()).find(|&v| !is_k_colourable(&g.delete_vertex(v), chi - 1))
    };
    let lemma2_violation = if !g.is_connected() {
        Some(StructuralViolation::Disconnected)
    } else if let Some((u, v)) = comparable_pair(g) {
        Some(StructuralViolation::ComparablePair(u, v))
    } else {
        clique_cutset(g).ok().flatten().map(StructuralViolation::CliqueCutset)
    };
    let is_critical = k >= 1 && chi == k && failing_vertex.is_none() && lemma2_violation != Some(StructuralViolation::Disconnected);
    CriticalityReport { is_critical, chi, failing_vertex, lemma2_violation, lemma3_violation: lemma3_witness(g, DEFAULT_LEMMA3_CAP) }
}

/// Boolean criticality test with cheap necessary conditions first.
pub fn is_vertex_critical(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k == 0 || n < k {
        return false;
    }
    if k == 1 {
        return n == 1;
    }
    if (0..n).any(|v| g.degree(v) < k - 1) || !g.is_connected() {
        return false;
    }
    if is_k_colourable(g, k - 1) {
        return false;
    }
    (0..n).all(|v| is_k_colourable(&g.delete_vertex(v), k - 1)) && is_k_colourable(g, k)
}

/// The least pair `(u, v)`, `u ≠ v`, with `N(u) ⊆ N(v)`.
pub fn comparable_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).find(|&(u, v)| u != v && g.neighbours(u).is_subset(g.neighbours(v)))
}

/// The least pair `(u, v)`, `u ≠ v`, with `N[u] ⊆ N[v]`.
pub fn closed_comparable_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let closed = |v: usize| g.neighbours(v).union(VertexSet::singleton(v));
    (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).find(|&(u, v)| u != v && closed(u).is_subset(closed(v)))
}

/// A clique whose removal disconnects `g`; smallest size first, then least
/// bitset.
pub fn clique_cutset(g: &Graph) -> Result<Option<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let all = g.vertices();
    let mut level: Vec<VertexSet> = (0..g.order()).map(VertexSet::singleton).collect();
    while !level.is_empty() {
        let mut hits: Vec<VertexSet> = level
            .iter()
            .copied()
            .filter(|&k| {
                let rest = all.difference(k);
                !rest.is_empty() && g.components(rest).len() > 1
            })
            .collect();
        if !hits.is_empty() {
            hits.sort_by_key(|s| s.bits());
            return Ok(hits.first().copied());
        }
        let mut next = Vec::new();
        for &k in &level {
            let top = 64 - k.bits().leading_zeros() as usize;
            let ext = g.common_neighbours(k).bits() & !((1u64 << top) - 1);
            for v in VertexSet(ext) {
                let mut bigger = k;
                bigger.insert(v);
                next.push(bigger);
            }
        }
        level = next;
    }
    Ok(None)
}

/// Whether `k` is a clique cutset of `g`.
pub fn is_clique_cutset(g: &Graph, k: VertexSet) -> bool {
    let rest = g.vertices().difference(k);
    k.is_subset(g.vertices()) && g.is_clique(k) && g.components(rest).len() > 1
}

/// Disjoint nonempty `X`, `Y` with `|X|, |Y| ≤ size_cap`, `X` anticomplete to
/// `Y`, `χ(X) ≤ χ(Y)` and `Y` complete to `N(X)`. `None` only means nothing
/// was found within the cap.
pub fn lemma3_witness(g: &Graph, size_cap: usize) -> Option<(VertexSet, VertexSet)> {
    if size_cap == 0 {
        return None;
    }
    for x in subsets_up_to(g.vertices(), size_cap) {
        let nx = g.neighbourhood_of_set(x);
        let pool = g.common_neighbours(nx).difference(x).difference(nx);
        if pool.is_empty() {
            continue;
        }
        let chi_x = chi_of(g, x);
        if let Some(y) = subsets_up_to(pool, size_cap).into_iter().find(|&y| chi_of(g, y) >= chi_x) {
            return Some((x, y));
        }
    }
    None
}

/// Every such pair within the cap where `Y` is minimal: dropping any vertex
/// of `Y` brings its chromatic number below that of `X`.
pub fn lemma3_witnesses(g: &Graph, size_cap: usize) -> Vec<(VertexSet, VertexSet)> {
    let mut out = Vec::new();
    if size_cap == 0 {
        return out;
    }
    for x in subsets_up_to(g.vertices(), size_cap) {
        let nx = g.neighbourhood_of_set(x);
        let pool = g.common_neighbours(nx).difference(x).difference(nx);
        if pool.is_empty() {
            continue;
        }
        let chi_x = chi_of(g, x);
        for y in subsets_up_to(pool, size_cap.min(chi_x.max(1) * size_cap)) {
            if chi_of(g, y) >= chi_x && y.iter().all(|v| y.len() == 1 || chi_of(g, y.difference(VertexSet::singleton(v))) < chi_x) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Whether `(x, y)` satisfies the three conditions.
pub fn is_lemma3_pair(g: &Graph, x: VertexSet, y: VertexSet) -> bool {
    !x.is_empty()
        && !y.is_empty()
        && !x.intersects(y)
        && x.union(y).is_subset(g.vertices())
        && g.is_anticomplete_to(x, y)
        && chi_of(g, x) <= chi_of(g, y)
        && g.is_complete_to(y, g.neighbourhood_of_set(x))
}

fn chi_of(g: &Graph, s: VertexSet) -> usize {
    chromatic_number(&g.induced_unchecked(s))
}

/// Nonempty subsets of `within` with at most `cap` members, by size and then
/// by bitset value.
fn subsets_up_to(within: VertexSet, cap: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut level = vec![VertexSet::EMPTY];
    for _ in 0..cap.min(within.len()) {
        let mut next = Vec::new();
        for s in &level {
            let top = 64 - s.bits().leading_zeros() as usize;
            let ext = within.bits() & !((1u64 << top) - 1);
            for v in VertexSet(ext) {
                let mut t = *s;
                t.insert(v);
                next.push(t);
            }
        }
        next.sort_by_key(|s| s.bits());
        out.extend_from_slice(&next);
        level = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn named(s: &str) -> Graph {
        s.parse::<NamedGraph>().unwrap().build().unwrap()
    }

    fn star() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn criticality_examples() {
        for name in ["k5", "c5_join_k2", "co_c9"] {
            let r = is_k_vertex_critical(&named(name), 5);
            assert!(r.is_critical && r.chi == 5 && r.failing_vertex.is_none(), "{name}");
            assert!(is_vertex_critical(&named(name), 5));
        }
        let r = is_k_vertex_critical(&named("p6"), 2);
        assert!(!r.is_critical);
        let v = r.failing_vertex.unwrap();
        assert!(v == 0 || v == 5);
        assert!(!is_vertex_critical(&named("p6"), 2));
        assert!(is_vertex_critical(&named("c7"), 3));
        assert!(!is_vertex_critical(&named("c6"), 3));
    }

    #[test]
    fn disconnected_input() {
        let g = named("k5").disjoint_union(&named("k5")).unwrap();
        let r = is_k_vertex_critical(&g, 5);
        assert!(!r.is_critical);
        assert_eq!(r.lemma2_violation, Some(StructuralViolation::Disconnected));
        assert!(matches!(clique_cutset(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn comparable_examples() {
        assert_eq!(comparable_pair(&named("k5")), None);
        assert!(closed_comparable_pair(&named("k5")).is_some());
        assert_eq!(comparable_pair(&star()), Some((1, 2)));
        assert_eq!(comparable_pair(&named("c5")), None);
    }

    #[test]
    fn clique_cutset_examples() {
        assert_eq!(clique_cutset(&named("p3")).unwrap(), Some(VertexSet::singleton(1)));
        assert_eq!(clique_cutset(&named("c5")).unwrap(), None);
        let bull = named("bull");
        assert_eq!(clique_cutset(&bull).unwrap(), Some(VertexSet::singleton(1)));
        // the triangle edge through both horn attachments is a cutset too
        assert!(is_clique_cutset(&bull, VertexSet::from_iter([1, 2])));
        assert_eq!(clique_cutset(&named("k5")).unwrap(), None);
    }

    #[test]
    fn lemma3_examples() {
        // in P4 = a-b-c-d, N(a) = {b} ⊆ N(c) = {b, d}
        let w = lemma3_witness(&named("p4"), 1).unwrap();
        assert_eq!(w, (VertexSet::singleton(0), VertexSet::singleton(2)));
        assert!(is_lemma3_pair(&named("p4"), w.0, w.1));
        assert_eq!(lemma3_witness(&star(), 1), Some((VertexSet::singleton(1), VertexSet::singleton(2))));
        assert_eq!(lemma3_witness(&named("k5"), 2), None);
        assert_eq!(lemma3_witness(&named("c5_join_k2"), 3), None);
    }
}
