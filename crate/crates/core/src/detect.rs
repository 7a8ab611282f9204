//! Induced-subgraph search.
//!
//! Patterns are matched by backtracking over pattern vertices in a fixed order
//! that maximises adjacency to already-placed vertices. Candidates for the next
//! pattern vertex are one bitset expression: the common neighbourhood of the
//! images of its placed neighbours minus the neighbourhoods of the images of its
//! placed non-neighbours, restricted by degree.

use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{decode_graph6, Graph, NamedGraph, VertexSet, MAX_ORDER};

/// `map[p]` is the host vertex that pattern vertex `p` is sent to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    /// Injective, in range, and preserving both edges and non-edges.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        let k = pattern.order();
        if self.map.len() != k || self.map.iter().any(|&h| h >= host.order()) || self.image().len() != k {
            return false;
        }
        (0..k).all(|a| (a + 1..k).all(|b| pattern.has_edge(a, b) == host.has_edge(self.map[a], self.map[b])))
    }
}

/// A pattern prepared for repeated matching.
#[derive(Clone)]
pub struct Pattern {
    name: String,
    graph: Graph,
    /// Search order for an unanchored match.
    order: Vec<usize>,
    /// One anchored search order per orbit representative.
    anchored: Vec<Vec<usize>>,
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({}, {})", self.name, self.graph)
    }
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Pattern {
        let order = search_order(&graph, None);
        let anchored = orbit_representatives(&graph).into_iter().map(|p| search_order(&graph, Some(p))).collect();
        Pattern { name: name.into(), graph, order, anchored }
    }

    pub fn named(name: NamedGraph) -> Result<Pattern> {
        Ok(Pattern::new(name.to_string(), name.build()?))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    /// Some induced copy of the pattern in `host`.
    pub fn find_in(&self, host: &Graph) -> Option<Embedding> {
        let mut found = None;
        self.search(host, &self.order, None, &mut |m| {
            found = Some(Embedding { map: m.to_vec() });
            true
        });
        found
    }

    /// Some induced copy that uses host vertex `w`.
    pub fn find_through(&self, host: &Graph, w: usize) -> Option<Embedding> {
        let mut found = None;
        for ord in &self.anchored {
            self.search(host, ord, Some(w), &mut |m| {
                found = Some(Embedding { map: m.to_vec() });
                true
            });
            if found.is_some() {
                break;
            }
        }
        found
    }

    /// Vertex sets of all induced copies.
    pub fn copies_in(&self, host: &Graph) -> Vec<VertexSet> {
        let mut sets = std::collections::BTreeSet::new();
        self.search(host, &self.order, None, &mut |m| {
            sets.insert(m.iter().copied().collect::<VertexSet>());
            false
        });
        sets.into_iter().collect()
    }

    /// Every embedding, calling `visit` until it returns `true`.
    pub fn for_each_embedding(&self, host: &Graph, mut visit: impl FnMut(&[usize]) -> bool) {
        self.search(host, &self.order, None, &mut visit);
    }

    fn search(&self, host: &Graph, order: &[usize], anchor: Option<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) {
        let k = self.graph.order();
        if k > host.order() {
            return;
        }
        if k == 0 {
            visit(&[]);
            return;
        }
        let mut map = vec![usize::MAX; k];
        let mut st = State { host, pattern: &self.graph, order, map: &mut map, visit };
        let first = order[0];
        let start = match anchor {
            Some(w) => {
                if w >= host.order() || host.degree(w) < self.graph.degree(first) {
                    return;
                }
                VertexSet::singleton(w)
            }
            None => degree_at_least(host, self.graph.degree(first)),
        };
        st.extend(0, 0, start);
    }
}

struct State<'a, 'b> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    map: &'b mut [usize],
    visit: &'b mut dyn FnMut(&[usize]) -> bool,
}

impl State<'_, '_> {
    /// Places `order[depth]`; returns `true` to stop the search.
    fn extend(&mut self, depth: usize, used: u64, first_cands: VertexSet) -> bool {
        if depth == self.order.len() {
            return (self.visit)(self.map);
        }
        let p = self.order[depth];
        let mut cand = if depth == 0 { first_cands.bits() } else { self.host.vertices().bits() & !used };
        for &q in &self.order[..depth] {
            let img = self.host.neighbours(self.map[q]).bits();
            if self.pattern.has_edge(p, q) {
                cand &= img;
            } else {
                cand &= !img;
            }
        }
        let need = self.pattern.degree(p);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.host.degree(v) < need {
                continue;
            }
            self.map[p] = v;
            if self.extend(depth + 1, used | 1 << v, first_cands) {
                return true;
            }
        }
        self.map[p] = usize::MAX;
        false
    }
}

fn degree_at_least(g: &Graph, d: usize) -> VertexSet {
    (0..g.order()).filter(|&v| g.degree(v) >= d).collect()
}

/// Greedy order: start at the anchor (or a max-degree vertex), then repeatedly
/// take the vertex with most already-ordered neighbours, ties by degree, then label.
fn search_order(g: &Graph, anchor: Option<usize>) -> Vec<usize> {
    let k = g.order();
    if k == 0 {
        return Vec::new();
    }
    let mut order = Vec::with_capacity(k);
    let mut placed = VertexSet::EMPTY;
    let first = anchor.unwrap_or_else(|| (0..k).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap());
    order.push(first);
    placed.insert(first);
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (g.neighbours(v).intersection(placed).len(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        order.push(next);
        placed.insert(next);
    }
    order
}

/// One vertex per automorphism orbit; exact for patterns up to 8 vertices,
/// every vertex otherwise.
pub(crate) fn orbit_representatives(g: &Graph) -> Vec<usize> {
    let k = g.order();
    if k > 8 {
        return (0..k).collect();
    }
    let mut reps = Vec::new();
    let mut covered = VertexSet::EMPTY;
    let pat = Pattern { name: String::new(), graph: g.clone(), order: search_order(g, None), anchored: Vec::new() };
    for p in 0..k {
        if covered.contains(p) {
            continue;
        }
        reps.push(p);
        // automorphisms are the embeddings of g into itself
        pat.for_each_embedding(g, |m| {
            covered.insert(m[p]);
            false
        });
    }
    reps
}

pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    Pattern::new("", pattern.clone()).find_in(host)
}

/// An ordered list of forbidden induced subgraphs.
#[derive(Clone, Debug, Default)]
pub struct PatternFamily {
    patterns: Vec<Pattern>,
}

impl PatternFamily {
    pub fn new(patterns: Vec<Pattern>) -> Self {
        PatternFamily { patterns }
    }

    pub fn empty() -> Self {
        PatternFamily::default()
    }

    /// Comma-separated graph names, e.g. `p6,bull,f1`. Empty string gives
    /// the empty family.
    pub fn from_names(names: &str) -> Result<Self> {
        let mut pats = Vec::new();
        for part in names.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if part.eq_ignore_ascii_case("none") {
                continue;
            }
            pats.push(Pattern::named(part.parse::<NamedGraph>()?)?);
        }
        Ok(PatternFamily::new(pats))
    }

    /// Lines of `name<TAB>graph6`; blank lines and `#` comments are skipped.
    pub fn read_from(reader: impl BufRead) -> Result<Self> {
        let mut pats = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim_end_matches(['\r', '\n']);
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, g6) = line
                .split_once('\t')
                .ok_or_else(|| Error::Parse { line: i + 1, msg: "expected name<TAB>graph6".into() })?;
            let g = decode_graph6(g6).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
            pats.push(Pattern::new(name, g));
        }
        Ok(PatternFamily::new(pats))
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn names(&self) -> Vec<&str> {
        self.patterns.iter().map(|p| p.name()).collect()
    }

    /// The first pattern (in family order) that embeds, with its embedding.
    pub fn find_any(&self, host: &Graph) -> Option<(&Pattern, Embedding)> {
        self.patterns.iter().find_map(|p| p.find_in(host).map(|e| (p, e)))
    }

    pub fn is_free(&self, host: &Graph) -> bool {
        self.find_any(host).is_none()
    }

    /// Free of every pattern copy that passes through `w`. If `host - w` is
    /// already family-free this decides freeness of `host`.
    pub fn is_free_through(&self, host: &Graph, w: usize) -> bool {
        self.patterns.iter().all(|p| p.find_through(host, w).is_none())
    }
}

impl FromStr for PatternFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PatternFamily::from_names(s)
    }
}

impl fmt::Display for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.patterns.is_empty() {
            return f.write_str("none");
        }
        f.write_str(&self.names().join(","))
    }
}

pub fn is_family_free(host: &Graph, fam: &PatternFamily) -> bool {
    fam.is_free(host)
}

/// An induced five-cycle, listed in cycle order.
pub fn find_induced_c5(g: &Graph) -> Option<[usize; 5]> {
    let c5 = c5_pattern();
    c5.find_in(g).map(|e| [e.map[0], e.map[1], e.map[2], e.map[3], e.map[4]])
}

/// Every induced five-cycle, one cycle-ordered tuple per vertex set, ordered
/// by vertex set.
pub fn induced_c5s(g: &Graph) -> Vec<[usize; 5]> {
    let mut by_set = std::collections::BTreeMap::new();
    c5_pattern().for_each_embedding(g, |m| {
        let set: VertexSet = m.iter().copied().collect();
        by_set.entry(set).or_insert([m[0], m[1], m[2], m[3], m[4]]);
        false
    });
    by_set.into_values().collect()
}

fn c5_pattern() -> Pattern {
    Pattern::named(NamedGraph::Cycle(5)).expect("c5")
}

/// Order limit for [`is_perfect`].
pub const PERFECT_ORDER_LIMIT: usize = 20;

/// Perfection via odd holes and odd antiholes.
pub fn is_perfect(g: &Graph) -> Result<bool> {
    if g.order() > PERFECT_ORDER_LIMIT {
        return Err(Error::OrderTooLarge { order: g.order(), max: PERFECT_ORDER_LIMIT });
    }
    Ok(find_odd_hole(g).is_none() && find_odd_hole(&g.complement()).is_none())
}

/// An induced odd cycle of length at least five, in cycle order.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        // cycles whose least vertex is s
        let allowed = g.vertices().bits() & !((2u64 << s) - 1);
        path.clear();
        path.push(s);
        if hole_dfs(g, allowed, &mut path, 0) {
            return Some(path);
        }
    }
    None
}

/// Extends the chordless path `path` (starting at its least vertex). `blocked`
/// holds vertices adjacent to an interior vertex of the path.
fn hole_dfs(g: &Graph, allowed: u64, path: &mut Vec<usize>, blocked: u64) -> bool {
    let s = path[0];
    let last = *path.last().unwrap();
    let on_path: u64 = path.iter().fold(0, |a, &v| a | 1 << v);
    let mut cand = g.neighbours(last).bits() & allowed & !on_path & !blocked;
    while cand != 0 {
        let x = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let closes = path.len() >= 2 && g.has_edge(x, s);
        if closes {
            if path.len() + 1 >= 5 && (path.len() + 1) % 2 == 1 {
                path.push(x);
                return true;
            }
            continue;
        }
        // `last` becomes interior once x is appended, except when it is s
        let nb = if path.len() >= 2 { blocked | g.neighbours(last).bits() } else { blocked };
        path.push(x);
        if hole_dfs(g, allowed, path, nb & !(1 << x)) {
            return true;
        }
        path.pop();
    }
    false
}
