//! Exact colouring.
//!
//! `k`-colourability is decided by DSATUR-style backtracking over bitset colour
//! classes, after stripping vertices of degree below `k` (they can always be
//! coloured last).

use crate::graph::{Graph, VertexSet};

/// A proper colouring, `colours[v] < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    pub colours: Vec<usize>,
}

impl Colouring {
    pub fn num_colours(&self) -> usize {
        self.colours.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.order() && g.edges().all(|(u, v)| self.colours[u] != self.colours[v])
    }

    pub fn class(&self, c: usize) -> VertexSet {
        self.colours.iter().enumerate().filter(|&(_, &x)| x == c).map(|(v, _)| v).collect()
    }
}

/// A colouring with at most `k` colours, if one exists.
pub fn k_colourable(g: &Graph, k: usize) -> Option<Colouring> {
    let n = g.order();
    if n == 0 {
        return Some(Colouring { colours: Vec::new() });
    }
    if k == 0 {
        return None;
    }
    // peel low-degree vertices
    let mut core = g.vertices();
    let mut peeled = Vec::new();
    loop {
        let low = core.iter().find(|&v| g.neighbours(v).intersection(core).len() < k);
        match low {
            Some(v) => {
                core.remove(v);
                peeled.push(v);
            }
            None => break,
        }
    }
    let mut colours = vec![usize::MAX; n];
    if !core.is_empty() {
        let mut s = Dsatur { g, k, classes: vec![0; k], used: 0 };
        if !s.solve(core.bits()) {
            return None;
        }
        for (c, &cls) in s.classes.iter().enumerate() {
            for v in VertexSet(cls) {
                colours[v] = c;
            }
        }
    }
    for &v in peeled.iter().rev() {
        let taken: u64 = g.neighbours(v).iter().filter(|&u| colours[u] != usize::MAX).fold(0, |a, u| a | 1 << colours[u]);
        colours[v] = (!taken).trailing_zeros() as usize;
        debug_assert!(colours[v] < k);
    }
    Some(Colouring { colours })
}

pub fn is_k_colourable(g: &Graph, k: usize) -> bool {
    k_colourable(g, k).is_some()
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    classes: Vec<u64>,
    used: usize,
}

impl Dsatur<'_> {
    fn solve(&mut self, uncoloured: u64) -> bool {
        if uncoloured == 0 {
            return true;
        }
        // most saturated vertex, ties by uncoloured degree
        let mut best = usize::MAX;
        let mut best_key = (0usize, 0usize);
        let mut best_free = 0u64;
        for v in VertexSet(uncoloured) {
            let nb = self.g.neighbours(v).bits();
            let mut free = 0u64;
            let mut sat = 0;
            for c in 0..self.used {
                if self.classes[c] & nb != 0 {
                    sat += 1;
                } else {
                    free |= 1 << c;
                }
            }
            if self.used < self.k {
                free |= 1 << self.used;
            }
            if free == 0 {
                return false;
            }
            let key = (sat, (nb & uncoloured).count_ones() as usize);
            if best == usize::MAX || key > best_key {
                best = v;
                best_key = key;
                best_free = free;
            }
        }
        let rest = uncoloured & !(1 << best);
        let mut free = best_free;
        while free != 0 {
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            let fresh = c == self.used;
            self.classes[c] |= 1 << best;
            if fresh {
                self.used += 1;
            }
            if self.solve(rest) {
                return true;
            }
            self.classes[c] &= !(1 << best);
            if fresh {
                self.used -= 1;
            }
        }
        false
    }
}

/// A colouring with the fewest colours.
pub fn optimal_colouring(g: &Graph) -> Colouring {
    let mut k = clique_number(g);
    loop {
        if let Some(c) = k_colourable(g, k) {
            return c;
        }
        k += 1;
    }
}

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_colouring(g).num_colours().max(if g.order() > 0 { 1 } else { 0 })
}

/// A maximum clique.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = 0u64;
    clique_search(g, 0, g.vertices().bits(), &mut best);
    VertexSet(best)
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

fn clique_search(g: &Graph, r: u64, mut p: u64, best: &mut u64) {
    if p == 0 {
        if r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    while p != 0 {
        if r.count_ones() + p.count_ones() <= best.count_ones() {
            return;
        }
        let v = p.trailing_zeros() as usize;
        p &= p - 1;
        clique_search(g, r | 1 << v, p & g.neighbours(v).bits(), best);
    }
}
