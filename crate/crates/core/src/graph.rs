//! Small simple graphs stored as adjacency bitsets.
//!
//! Every graph has at most [`MAX_ORDER`] vertices so that a vertex set fits in
//! one `u64`. Vertices are `0..n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// A set of vertices in `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub const fn range(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_iter_checked<I: IntoIterator<Item = usize>>(it: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in it {
            if v >= MAX_ORDER {
                return Err(Error::VertexOutOfRange { vertex: v, order: MAX_ORDER });
            }
            bits |= 1 << v;
        }
        Ok(VertexSet(bits))
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected simple graph on vertices `0..n`.
///
/// `adj[v]` is the open neighbourhood of `v`. Only the first `n` entries are
/// meaningful; the rest stay zero so that derived equality and hashing work.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        Ok(Graph { n, adj: [0; MAX_ORDER] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood bitsets, checking symmetry and loops.
    pub fn from_adjacency(adj: &[u64]) -> Result<Self> {
        let n = adj.len();
        let mut g = Graph::empty(n)?;
        let mask = VertexSet::range(n).0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Malformed(format!("neighbourhood of {v} leaves the vertex range")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::Malformed(format!("self-loop at {v}")));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in VertexSet(adj[u]) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::Malformed(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), order: self.n });
        }
        if u == v {
            return Err(Error::Malformed(format!("self-loop at {u}")));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Adds edge `uv`. Panics in debug builds on loops or out-of-range ends.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Appends a vertex whose neighbourhood is `nbrs` and returns its index.
    pub fn add_vertex(&mut self, nbrs: VertexSet) -> Result<usize> {
        if self.n >= MAX_ORDER {
            return Err(Error::OrderTooLarge { order: self.n + 1, max: MAX_ORDER });
        }
        if !nbrs.is_subset(self.vertices()) {
            return Err(Error::Malformed("new neighbourhood leaves the vertex range".into()));
        }
        let w = self.n;
        self.n += 1;
        self.adj[w] = nbrs.0;
        for v in nbrs {
            self.adj[v] |= 1 << w;
        }
        Ok(w)
    }

    /// The graph with one extra vertex adjacent to exactly `nbrs`.
    ///
    /// Hot-path version of [`Graph::add_vertex`] for the generator: the caller
    /// guarantees `n < 64` and `nbrs ⊆ V(G)`.
    #[inline]
    pub fn extended(&self, nbrs: VertexSet) -> Graph {
        debug_assert!(self.n < MAX_ORDER && nbrs.is_subset(self.vertices()));
        let mut g = self.clone();
        let w = g.n;
        g.n += 1;
        g.adj[w] = nbrs.0;
        let bit = 1u64 << w;
        for v in nbrs {
            g.adj[v] |= bit;
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Raw neighbourhood rows `adj[0..n]`.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter().map(move |v| (u, v))
        })
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// `N(X)`: vertices outside `x` with a neighbour in `x`.
    pub fn neighbourhood_of_set(&self, x: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in x {
            acc |= self.adj[v];
        }
        VertexSet(acc & !x.0)
    }

    /// Vertices adjacent to every member of `x` (all of `V` when `x` is empty).
    pub fn common_neighbours(&self, x: VertexSet) -> VertexSet {
        let mut acc = self.vertices().0;
        for v in x {
            acc &= self.adj[v];
        }
        VertexSet(acc)
    }

    pub fn is_clique(&self, x: VertexSet) -> bool {
        x.iter().all(|v| x.difference(VertexSet::singleton(v)).is_subset(self.neighbours(v)))
    }

    pub fn is_stable(&self, x: VertexSet) -> bool {
        x.iter().all(|v| !self.neighbours(v).intersects(x))
    }

    /// Every vertex of `x` is adjacent to every vertex of `y`.
    pub fn is_complete_to(&self, x: VertexSet, y: VertexSet) -> bool {
        x.iter().all(|v| y.difference(VertexSet::singleton(v)).is_subset(self.neighbours(v)))
    }

    /// No edge between `x` and `y`.
    pub fn is_anticomplete_to(&self, x: VertexSet, y: VertexSet) -> bool {
        x.iter().all(|v| !self.neighbours(v).intersects(y))
    }

    pub fn is_pure_to(&self, x: VertexSet, y: VertexSet) -> bool {
        self.is_complete_to(x, y) || self.is_anticomplete_to(x, y)
    }

    /// Whether every vertex outside `x` is complete or anticomplete to `x`.
    pub fn is_homogeneous(&self, x: VertexSet) -> bool {
        self.vertices().difference(x).iter().all(|v| {
            let hit = self.neighbours(v).intersection(x);
            hit.is_empty() || hit == x
        })
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components(self.vertices()).len() == 1
    }

    /// Connected components of `G[within]`, sorted by smallest member.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        let within = within.intersection(self.vertices());
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(s) = rest.first() {
            let comp = self.reach(s, within);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `within`.
    pub fn reach(&self, s: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier {
                next |= self.adj[v];
            }
            let next = VertexSet(next).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let all = self.vertices().0;
        for v in 0..self.n {
            g.adj[v] = all & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// `G[s]`, relabelled `0..|s|` in ascending order of the original labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if !s.is_subset(self.vertices()) {
            let bad = s.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: bad, order: self.n });
        }
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> Graph {
        let verts: Vec<usize> = s.to_vec();
        let mut g = Graph { n: verts.len(), adj: [0; MAX_ORDER] };
        for (i, &v) in verts.iter().enumerate() {
            let row = self.adj[v] & s.0;
            // compress the row onto the new labels
            let mut r = 0u64;
            for (j, &w) in verts.iter().enumerate() {
                if row >> w & 1 == 1 {
                    r |= 1 << j;
                }
            }
            g.adj[i] = r;
        }
        g
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_unchecked(self.vertices().difference(VertexSet::singleton(v)))
    }

    /// Disjoint union; `h`'s vertices follow `self`'s.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        let n = self.n + h.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        let mut g = self.clone();
        g.n = n;
        for v in 0..h.n {
            g.adj[self.n + v] = h.adj[v] << self.n;
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, h: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(h)?;
        let left = VertexSet::range(self.n).0;
        let right = VertexSet::range(g.n).0 & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: [0; MAX_ORDER] };
        for u in 0..self.n {
            let mut r = 0u64;
            for v in self.neighbours(u) {
                r |= 1 << perm[v];
            }
            g.adj[perm[u]] = r;
        }
        g
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", encode_graph6(self), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Graph> {
        decode_graph6(s)
    }
}

/// Standard graph6 encoding (no `>>graph6<<` header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    // all bytes are in 63..=126
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses one graph6 string. A `>>graph6<<` header and surrounding
/// whitespace are tolerated.
pub fn decode_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside the printable graph6 range")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = ((bytes[1] - 63) as usize) << 12 | ((bytes[2] - 63) as usize) << 6 | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        return Err(Error::Graph6("unsupported order header".into()));
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("expected {expected} data bytes for n={n}, found {}", body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

/// Graphs that have a fixed name.
///
/// Vertex numbering: cycles and paths run `0..n` in order; for every graph
/// drawn around an induced five-cycle the rim is `0..5` in cycle order
/// (`u1..u5` become `0..4`) and extra vertices are appended in drawing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Triangle `1,2,4` with horns `0` (on `1`) and `3` (on `2`).
    Bull,
    /// Four-cycle `0,1,2,3` with pendant `4` on `0`.
    Banner,
    /// Claw centred at `0` with one leaf (`1`) subdivided by `2`.
    Chair,
    CoC7,
    CoC9,
    /// Rim `0..5`, hub pair `5,6`.
    C5JoinK2,
    /// Rim `0..5`, hub `5`. Same graph as `F2`.
    W5,
    /// Rim plus `5 ∈ S1(u1)` and `6 ∈ S4(u1)`, adjacent.
    D,
    /// Rim plus two nonadjacent vertices of `S4(u1)`.
    E,
    /// Rim plus `5 ∈ S2` and `6 ∈ S4(u1)`, adjacent; `i` picks the position
    /// of the `S2` vertex.
    H(u8),
    /// `F1`..`F6`.
    F(u8),
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph> {
        build_named(self)
    }

    /// All fixed (non-parameterised) names, for listing and tests.
    pub fn fixed() -> Vec<NamedGraph> {
        use NamedGraph::*;
        let mut v = vec![Bull, Banner, Chair, CoC7, CoC9, C5JoinK2, W5, D, E];
        v.extend((1..=5).map(H));
        v.extend((1..=6).map(F));
        v
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match self {
            Path(n) => write!(f, "p{n}"),
            Cycle(n) => write!(f, "c{n}"),
            Complete(n) => write!(f, "k{n}"),
            Bull => f.write_str("bull"),
            Banner => f.write_str("banner"),
            Chair => f.write_str("chair"),
            CoC7 => f.write_str("co_c7"),
            CoC9 => f.write_str("co_c9"),
            C5JoinK2 => f.write_str("c5_join_k2"),
            W5 => f.write_str("w5"),
            D => f.write_str("d"),
            E => f.write_str("e"),
            H(i) => write!(f, "h{i}"),
            F(i) => write!(f, "f{i}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Case-insensitive; accepts `co_c7`, `coc7`, `c5_join_k2`, `c5vk2`, etc.
    fn from_str(s: &str) -> Result<NamedGraph> {
        use NamedGraph::*;
        let lower = s.trim().to_ascii_lowercase().replace(['-', ' '], "_");
        let fixed = match lower.as_str() {
            "bull" => Some(Bull),
            "banner" => Some(Banner),
            "chair" => Some(Chair),
            "co_c7" | "coc7" | "cobar_c7" => Some(CoC7),
            "co_c9" | "coc9" => Some(CoC9),
            "c5_join_k2" | "c5vk2" | "c5_vee_k2" => Some(C5JoinK2),
            "w5" | "wheel5" => Some(W5),
            "d" => Some(D),
            "e" => Some(E),
            _ => None,
        };
        if let Some(g) = fixed {
            return Ok(g);
        }
        let unknown = || Error::UnknownName(s.to_string());
        let (head, digits) = lower.split_at(lower.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?);
        let k: usize = digits.parse().map_err(|_| unknown())?;
        match head {
            "p" => Ok(Path(k)),
            "c" => Ok(Cycle(k)),
            "k" => Ok(Complete(k)),
            "h" if (1..=5).contains(&k) => Ok(H(k as u8)),
            "f" if (1..=6).contains(&k) => Ok(F(k as u8)),
            _ => Err(unknown()),
        }
    }
}

/// Five-cycle on `0..5` plus `extra` appended vertices with the given edges.
/// Edge lists use the 1-based labels (`1..5` rim, `6`, `7` extras).
fn rim_plus(extra: usize, edges: &[(usize, usize)]) -> Graph {
    let mut g = Graph::empty(5 + extra).expect("small");
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
    }
    for &(a, b) in edges {
        g.add_edge(a - 1, b - 1);
    }
    g
}

pub fn build_named(name: NamedGraph) -> Result<Graph> {
    use NamedGraph::*;
    let check = |n: usize, min: usize| -> Result<()> {
        if n > MAX_ORDER {
            Err(Error::OrderTooLarge { order: n, max: MAX_ORDER })
        } else if n < min {
            Err(Error::InvalidParameter(format!("{name} needs n >= {min}")))
        } else {
            Ok(())
        }
    };
    Ok(match name {
        Path(n) => {
            check(n, 1)?;
            let mut g = Graph::empty(n)?;
            for i in 1..n {
                g.add_edge(i - 1, i);
            }
            g
        }
        Cycle(n) => {
            check(n, 3)?;
            let mut g = Graph::empty(n)?;
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
            g
        }
        Complete(n) => {
            check(n, 1)?;
            Graph::empty(n)?.complement()
        }
        Bull => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)])?,
        Banner => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])?,
        Chair => Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (0, 4)])?,
        CoC7 => build_named(Cycle(7))?.complement(),
        CoC9 => build_named(Cycle(9))?.complement(),
        C5JoinK2 => rim_plus(2, &[(1, 6), (2, 6), (3, 6), (4, 6), (5, 6), (1, 7), (2, 7), (3, 7), (4, 7), (5, 7), (6, 7)]),
        W5 | F(2) => rim_plus(1, &[(1, 6), (2, 6), (3, 6), (4, 6), (5, 6)]),
        D => rim_plus(2, &[(1, 6), (2, 7), (3, 7), (4, 7), (5, 7), (6, 7)]),
        E => rim_plus(2, &[(2, 6), (3, 6), (4, 6), (5, 6), (2, 7), (3, 7), (4, 7), (5, 7)]),
        H(i) => {
            let s2 = match i {
                1 => (2, 5),
                2 => (1, 3),
                3 => (2, 4),
                4 => (3, 5),
                5 => (4, 1),
                _ => return Err(Error::UnknownName(format!("h{i}"))),
            };
            rim_plus(2, &[(s2.0, 6), (s2.1, 6), (2, 7), (3, 7), (4, 7), (5, 7), (6, 7)])
        }
        F(1) => rim_plus(2, &[(1, 6), (2, 6), (3, 6), (4, 6), (5, 6), (6, 7)]),
        F(3) => rim_plus(2, &[(2, 6), (5, 6), (1, 7), (2, 7), (5, 7), (6, 7)]),
        F(4) => rim_plus(2, &[(2, 6), (5, 6), (1, 7), (6, 7)]),
        F(5) => rim_plus(2, &[(1, 6), (1, 7)]),
        F(6) => rim_plus(1, &[(2, 6), (5, 6)]),
        F(i) => return Err(Error::UnknownName(format!("f{i}"))),
    })
}
