//! Canonical labelling by partition refinement and individualisation.
//!
//! The search refines an ordered vertex partition to an equitable one,
//! individualises vertices of the first smallest non-singleton cell, and keeps
//! the lexicographically least relabelled adjacency matrix over all leaves.
//! Automorphisms found along the way (two leaves with equal matrices) prune
//! children that lie in one orbit of the stabiliser of the current prefix.

use std::fmt;

use dashmap::DashSet;

use crate::graph::{decode_graph6, encode_graph6, Graph};

/// graph6 bytes of the canonically relabelled graph.
///
/// Two graphs have equal forms exactly when they are isomorphic. Ordering is
/// byte order, so forms of smaller graphs sort first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Box<str>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        decode_graph6(&self.0).expect("canonical forms hold valid graph6")
    }

    /// Reads a form back from its graph6 text, re-canonicalising so that
    /// arbitrary graph6 input is accepted.
    pub fn parse(s: &str) -> crate::Result<Self> {
        Ok(canonical_form(&decode_graph6(s)?))
    }

    /// Order of the underlying graph.
    pub fn order(&self) -> usize {
        let b = self.0.as_bytes();
        if b[0] != 126 {
            (b[0] - 63) as usize
        } else {
            ((b[1] - 63) as usize) << 12 | ((b[2] - 63) as usize) << 6 | (b[3] - 63) as usize
        }
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(encode_graph6(&canonical_graph(g)).into_boxed_str())
}

/// The canonical relabelling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let perm = canonical_labelling(g);
    g.permuted(&perm)
}

/// `perm[v]` is the canonical label of vertex `v`.
pub fn canonical_labelling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut search = Search { rows: g.rows(), n, best: None, first: None, autos: Vec::new() };
    let mut prefix = Vec::with_capacity(n);
    let _ = search.descend(vec![g.vertices().bits()], &mut prefix);
    search.best.expect("at least one leaf").perm.into_iter().map(usize::from).collect()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

struct Leaf {
    code: Vec<u64>,
    perm: Vec<u8>,
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    best: Option<Leaf>,
    first: Option<Leaf>,
    /// Automorphisms as vertex maps.
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    /// Returns the depth to jump back to when an automorphism shows the rest
    /// of the current subtree is a copy of one already explored.
    fn descend(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        refine(self.rows, &mut cells);
        if cells.len() == self.n {
            return self.leaf(&cells, prefix);
        }
        let (ti, target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, &c)| (i, c))
            .expect("non-discrete partition has a non-singleton cell");

        let mut explored = 0u64;
        let mut rest = target;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if explored != 0 && self.equivalent_to_explored(v, explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            prefix.push(v);
            let jump = self.descend(child, prefix);
            prefix.pop();
            explored |= 1u64 << v;
            if let Some(t) = jump {
                if t < prefix.len() {
                    return Some(t);
                }
            }
        }
        None
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix `prefix` pointwise.
    fn equivalent_to_explored(&self, v: usize, explored: u64, prefix: &[usize]) -> bool {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(p: &mut [u8], mut x: usize) -> usize {
            while p[x] as usize != x {
                p[x] = p[p[x] as usize];
                x = p[x] as usize;
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().any(|&p| a[p] as usize != p) {
                continue;
            }
            any = true;
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y as usize));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        let mut e = explored;
        while e != 0 {
            let u = e.trailing_zeros() as usize;
            e &= e - 1;
            if find(&mut parent, u) == rv {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let n = self.n;
        let mut perm = vec![0u8; n];
        for (pos, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = pos as u8;
        }
        let mut code = vec![0u64; n];
        for u in 0..n {
            let mut r = 0u64;
            let mut row = self.rows[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                r |= 1u64 << (n - 1 - perm[v] as usize);
            }
            code[perm[u] as usize] = r;
        }
        let leaf = Leaf { code, perm, path: prefix.to_vec() };

        let mut jump = None;
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.code == leaf.code {
                let common = known.path.iter().zip(prefix).take_while(|(a, b)| a == b).count();
                jump = Some(jump.map_or(common, |j: usize| j.min(common)));
                // leaf.perm then known.perm^-1 maps G onto itself
                let mut inv = vec![0u8; n];
                for (v, &p) in known.perm.iter().enumerate() {
                    inv[p as usize] = v as u8;
                }
                let auto: Vec<u8> = leaf.perm.iter().map(|&p| inv[p as usize]).collect();
                if auto.iter().enumerate().any(|(i, &x)| x as usize != i) && !self.autos.contains(&auto) {
                    self.autos.push(auto);
                }
            }
        }
        // reversed bit order above makes Vec<u64> comparison lexicographic
        // in row-major adjacency order
        let better = match &self.best {
            None => true,
            Some(b) => leaf.code < b.code,
        };
        if self.first.is_none() {
            self.first = Some(Leaf { code: leaf.code.clone(), perm: leaf.perm.clone(), path: leaf.path.clone() });
        }
        if better {
            self.best = Some(leaf);
        }
        jump
    }
}

/// Refines an ordered partition until it is equitable.
///
/// A cell is split by the number of neighbours its vertices have in a
/// splitter cell; fragments are placed in increasing count order at the
/// position of the original cell. Only positions and counts are consulted,
/// so the result commutes with relabelling.
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut scratch: Vec<(u32, usize)> = Vec::with_capacity(64);
    'restart: loop {
        for wi in 0..cells.len() {
            let w = cells[wi];
            let mut split_any = false;
            let mut out: Vec<u64> = Vec::with_capacity(cells.len() + 2);
            for &x in cells.iter() {
                if x & (x - 1) == 0 {
                    out.push(x);
                    continue;
                }
                scratch.clear();
                let mut bits = x;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    scratch.push(((rows[v] & w).count_ones(), v));
                }
                let c0 = scratch[0].0;
                if scratch.iter().all(|&(c, _)| c == c0) {
                    out.push(x);
                    continue;
                }
                split_any = true;
                scratch.sort_unstable();
                let mut cur = scratch[0].0;
                let mut cell = 0u64;
                for &(c, v) in &scratch {
                    if c != cur {
                        out.push(cell);
                        cell = 0;
                        cur = c;
                    }
                    cell |= 1u64 << v;
                }
                out.push(cell);
            }
            if split_any {
                *cells = out;
                continue 'restart;
            }
        }
        return;
    }
}

/// Set of canonical forms with linearisable insert-or-check.
#[derive(Default)]
pub struct SeenStore {
    inner: DashSet<CanonicalForm>,
}

impl SeenStore {
    pub fn new() -> Self {
        SeenStore::default()
    }

    /// Returns `true` if `c` was not present before.
    pub fn insert(&self, c: CanonicalForm) -> bool {
        self.inner.insert(c)
    }

    pub fn contains(&self, c: &CanonicalForm) -> bool {
        self.inner.contains(c)
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn clear(&self) {
        self.inner.clear()
    }

    /// All stored forms in ascending order.
    pub fn sorted(&self) -> Vec<CanonicalForm> {
        let mut v: Vec<CanonicalForm> = self.inner.iter().map(|c| c.key().clone()).collect();
        v.sort_unstable();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{NamedGraph, VertexSet};
    use std::collections::HashSet;

    fn named(s: &str) -> Graph {
        s.parse::<NamedGraph>().unwrap().build().unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let mut g = Graph::empty(n).unwrap();
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
            g
        })
    }

    /// Brute-force isomorphism class key: least adjacency code over all n! relabellings.
    fn brute_key(g: &Graph, perms: &[Vec<usize>]) -> String {
        perms.iter().map(|p| encode_graph6(&g.permuted(p))).min().unwrap()
    }

    #[test]
    fn c5_form_is_relabelling_invariant() {
        let c5 = named("c5");
        let f = canonical_form(&c5);
        for p in permutations(5) {
            assert_eq!(canonical_form(&c5.permuted(&p)), f);
        }
    }

    #[test]
    fn bull_and_chair_differ() {
        assert_ne!(canonical_form(&named("bull")), canonical_form(&named("chair")));
    }

    #[test]
    fn class_counts_small_orders() {
        // 11, 34 and 156 unlabelled graphs on 4, 5 and 6 vertices; the brute
        // oracle below recomputes the class count from all n! relabellings.
        for (n, expected) in [(4usize, 11usize), (5, 34), (6, 156)] {
            let forms: HashSet<CanonicalForm> = all_labelled(n).map(|g| canonical_form(&g)).collect();
            assert_eq!(forms.len(), expected, "n = {n}");
        }
        for n in [4usize, 5] {
            let perms = permutations(n);
            let brute: HashSet<String> = all_labelled(n).map(|g| brute_key(&g, &perms)).collect();
            let forms: HashSet<CanonicalForm> = all_labelled(n).map(|g| canonical_form(&g)).collect();
            assert_eq!(brute.len(), forms.len());
        }
    }

    #[test]
    fn self_complementary_c5() {
        assert!(are_isomorphic(&named("c5"), &named("c5").complement()));
    }

    #[test]
    fn h_graph_isomorphisms() {
        assert!(are_isomorphic(&named("h2"), &named("h5")));
        assert!(are_isomorphic(&named("h3"), &named("h4")));
        assert!(!are_isomorphic(&named("h2"), &named("h3")));
        assert!(!are_isomorphic(&named("h1"), &named("h2")));
    }

    #[test]
    fn highly_symmetric_graphs_are_fast_and_correct() {
        for n in [20, 40, 64] {
            let k = named(&format!("k{n}"));
            assert_eq!(canonical_graph(&k), k);
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_graph(&e), e);
        }
        let c = named("c30");
        let mut p: Vec<usize> = (0..30).collect();
        p.reverse();
        p.swap(3, 17);
        let shuffled = c.permuted(&p);
        assert_eq!(canonical_form(&c), canonical_form(&shuffled));
    }

    #[test]
    fn seen_store_insert_semantics() {
        let store = SeenStore::new();
        let f = canonical_form(&named("c5"));
        assert!(store.insert(f.clone()));
        assert!(!store.insert(f));
        let g = named("bull");
        let h = g.permuted(&[4, 3, 2, 1, 0]);
        assert!(store.insert(canonical_form(&g)));
        assert!(!store.insert(canonical_form(&h)));
        assert_eq!(store.len(), 2);
    }

    #[test]
    fn form_round_trips_to_an_isomorphic_graph() {
        let g = named("d");
        let f = canonical_form(&g);
        assert_eq!(f.order(), 7);
        assert_eq!(canonical_form(&f.to_graph()), f);
        assert_eq!(CanonicalForm::parse(&encode_graph6(&g)).unwrap(), f);
    }

    #[test]
    fn disconnected_twins() {
        // two disjoint triangles vs a hexagon: same degree sequence
        let a = named("k3").disjoint_union(&named("k3")).unwrap();
        let b = named("c6");
        assert!(!are_isomorphic(&a, &b));
        let s = VertexSet::from_iter([0, 1, 2]);
        assert!(a.is_clique(s));
    }
}
