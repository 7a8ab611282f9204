//! One-vertex extensions of a node.
//!
//! The new vertex `w` gets neighbourhood `S ⊆ V(g)`. An induced copy of a
//! pattern `H` through `w` is an induced copy of `H - a` in `g` for some `a`,
//! whose images of `N_H(a)` all lie in `S` and whose other images avoid `S`.
//! Each such partial copy is stored as a cube `(inside, outside)` and `S` is
//! built vertex by vertex, cutting a branch as soon as it completes a cube.

use crate::colour::{is_k_colourable, k_colourable};
use crate::critical::lemma3_witnesses;
use crate::detect::{orbit_representatives, Pattern, PatternFamily};
use crate::graph::{Graph, VertexSet};

use super::Rules;

/// A pattern minus one vertex, with the neighbours of the removed vertex.
#[derive(Clone, Debug)]
pub(crate) struct PunctedPattern {
    rest: Pattern,
    attach: u64,
}

pub(crate) fn puncture(family: &PatternFamily) -> Vec<PunctedPattern> {
    let mut out = Vec::new();
    for p in family.patterns() {
        let h = p.graph();
        for a in orbit_representatives(h) {
            let keep = h.vertices().difference(VertexSet::singleton(a));
            let rest = h.induced_subgraph(keep).expect("in range");
            let mut attach = 0u64;
            for (i, v) in keep.iter().enumerate() {
                if h.has_edge(a, v) {
                    attach |= 1 << i;
                }
            }
            out.push(PunctedPattern { rest: Pattern::new(format!("{}-{a}", p.name()), rest), attach });
        }
    }
    out
}

/// The constraint a node's children must resolve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Forcing {
    Free,
    /// New vertex adjacent to `u` and not to `v`.
    Comparable { u: usize, v: usize },
    /// New vertex with a neighbour in `x` and a non-neighbour in `y`.
    Lemma3 { x: VertexSet, y: VertexSet },
    /// New vertex adjacent to `u`.
    LowDegree { u: usize },
}

/// Every violated condition the enabled forcing rules know about, in a fixed
/// order.
pub(crate) fn violated_constraints(g: &Graph, k: usize, rules: &Rules) -> Vec<Forcing> {
    let n = g.order();
    let mut out = Vec::new();
    if rules.comparable_forcing {
        for u in 0..n {
            for v in 0..n {
                if u != v && g.neighbours(u).is_subset(g.neighbours(v)) {
                    out.push(Forcing::Comparable { u, v });
                }
            }
        }
    }
    if rules.lemma3_forcing {
        out.extend(lemma3_witnesses(g, rules.lemma3_cap).into_iter().map(|(x, y)| Forcing::Lemma3 { x, y }));
    }
    if rules.degree_forcing {
        out.extend((0..n).filter(|&u| g.degree(u) + 1 < k).map(|u| Forcing::LowDegree { u }));
    }
    out
}

/// Counters local to one node.
#[derive(Clone, Debug, Default)]
pub(crate) struct ExtendCounts {
    pub family_cuts: u64,
    pub candidates: u64,
}

/// Partial pattern copies in `g`, indexed by their highest vertex.
pub(crate) struct Cubes {
    by_top: Vec<Vec<(u64, u64)>>,
}

impl Cubes {
    pub fn new(g: &Graph, punctured: &[PunctedPattern], family_rule: bool) -> Self {
        let n = g.order();
        let mut all = Vec::new();
        if family_rule {
            for pp in punctured {
                pp.rest.for_each_embedding(g, |m| {
                    let mut inside = 0u64;
                    let mut outside = 0u64;
                    for (i, &h) in m.iter().enumerate() {
                        if pp.attach >> i & 1 == 1 {
                            inside |= 1 << h;
                        } else {
                            outside |= 1 << h;
                        }
                    }
                    all.push((inside, outside));
                    false
                });
            }
        }
        all.sort_unstable();
        all.dedup();
        let mut cubes_by_top: Vec<Vec<(u64, u64)>> = vec![Vec::new(); n];
        for (inside, outside) in all {
            let top = 63 - (inside | outside).leading_zeros() as usize;
            cubes_by_top[top].push((inside, outside));
        }
        Cubes { by_top: cubes_by_top }
    }

    /// Calls `visit(S)` for every neighbourhood `S` of the new vertex that
    /// completes no cube and resolves `forcing`. `visit` returns `false` to stop.
    pub fn walk(&self, forcing: Forcing, counts: &mut ExtendCounts, visit: &mut dyn FnMut(u64) -> bool) {
        let (forced_in, forced_out) = match forcing {
            Forcing::Comparable { u, v } => (1u64 << u, 1u64 << v),
            Forcing::LowDegree { u } => (1u64 << u, 0),
            _ => (0, 0),
        };
        let mut walk = Walk { cubes_by_top: &self.by_top, forced_in, forced_out, forcing, counts, visit };
        walk.go(0, 0);
    }

    /// Number of extensions resolving `forcing`, or `None` once it passes `limit`.
    pub fn count(&self, forcing: Forcing, limit: u64) -> Option<u64> {
        let mut c = 0u64;
        let mut counts = ExtendCounts::default();
        self.walk(forcing, &mut counts, &mut |_| {
            c += 1;
            c <= limit
        });
        (c <= limit).then_some(c)
    }
}

struct Walk<'a> {
    cubes_by_top: &'a [Vec<(u64, u64)>],
    forced_in: u64,
    forced_out: u64,
    forcing: Forcing,
    counts: &'a mut ExtendCounts,
    visit: &'a mut dyn FnMut(u64) -> bool,
}

impl Walk<'_> {
    /// Returns `false` once the visitor asks to stop.
    fn go(&mut self, i: usize, s: u64) -> bool {
        if i == self.cubes_by_top.len() {
            if let Forcing::Lemma3 { x, y } = self.forcing {
                if s & x.bits() == 0 || y.bits() & !s == 0 {
                    return true;
                }
            }
            self.counts.candidates += 1;
            return (self.visit)(s);
        }
        let bit = 1u64 << i;
        for take in [false, true] {
            if (take && self.forced_out & bit != 0) || (!take && self.forced_in & bit != 0) {
                continue;
            }
            let s2 = if take { s | bit } else { s };
            if self.cubes_by_top[i].iter().any(|&(a, b)| a & !s2 == 0 && b & s2 == 0) {
                self.counts.family_cuts += 1;
                continue;
            }
            if !self.go(i + 1, s2) {
                return false;
            }
        }
        true
    }
}

/// Decides `(k-1)`-colourability of `g + S` cheaply when a known colouring of
/// `g` leaves a colour class untouched by `S`.
pub(crate) struct ColourOracle {
    classes: Vec<u64>,
    k: usize,
}

impl ColourOracle {
    pub fn new(g: &Graph, k: usize) -> Self {
        let classes = match k_colourable(g, k) {
            Some(c) => (0..k).map(|i| c.class(i).bits()).collect(),
            None => Vec::new(),
        };
        ColourOracle { classes, k }
    }

    pub fn child_colourable(&self, child: &Graph, s: u64) -> bool {
        if self.classes.len() == self.k && self.classes.iter().any(|&c| c & s == 0) {
            return true;
        }
        is_k_colourable(child, self.k)
    }
}
