//! Brute-force reference implementations and random instance builders.
//! Nothing here shares code with the search routines under test.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vcrit_core::{Graph, NamedGraph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn named(s: &str) -> Graph {
    s.parse::<NamedGraph>().unwrap().build().unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Plain backtracking in vertex order.
pub fn brute_colourable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, v: usize, col: &mut Vec<usize>) -> bool {
        if v == g.order() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !g.has_edge(u, v) || col[u] != c) {
                col[v] = c;
                if go(g, k, v + 1, col) {
                    return true;
                }
            }
        }
        false
    }
    go(g, k, 0, &mut vec![0; g.order()])
}

pub fn brute_chromatic(g: &Graph) -> usize {
    (0..=g.order()).find(|&k| brute_colourable(g, k)).unwrap()
}

pub fn brute_vertex_critical(g: &Graph, k: usize) -> bool {
    brute_chromatic(g) == k && (0..g.order()).all(|v| brute_chromatic(&g.delete_vertex(v)) < k)
}

/// Tries every injective map in vertex order.
pub fn brute_contains(host: &Graph, pat: &Graph) -> bool {
    fn go(host: &Graph, pat: &Graph, i: usize, map: &mut Vec<usize>) -> bool {
        if i == pat.order() {
            return true;
        }
        for h in 0..host.order() {
            if map.contains(&h) {
                continue;
            }
            if (0..i).all(|j| pat.has_edge(i, j) == host.has_edge(h, map[j])) {
                map.push(h);
                if go(host, pat, i + 1, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    pat.order() <= host.order() && go(host, pat, 0, &mut Vec::new())
}

pub fn brute_free(g: &Graph, family: &[Graph]) -> bool {
    family.iter().all(|p| !brute_contains(g, p))
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && brute_contains(a, b)
}

/// Grows a graph one random vertex at a time, redrawing any vertex that
/// would create a member of `family`.
pub fn random_free_graph(rng: &mut impl Rng, n: usize, p: f64, family: &[Graph]) -> Graph {
    let mut g = Graph::empty(0).unwrap();
    while g.order() < n {
        let mut placed = false;
        for _ in 0..200 {
            let s: VertexSet = (0..g.order()).filter(|_| rng.gen_bool(p)).collect();
            let h = g.extended(s);
            if brute_free(&h, family) {
                g = h;
                placed = true;
                break;
            }
        }
        if !placed {
            break;
        }
    }
    g
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(VertexSet)
}

pub fn brute_homogeneous(g: &Graph, s: VertexSet) -> bool {
    (0..g.order()).filter(|&v| !s.contains(v)).all(|v| {
        let hits = s.iter().filter(|&x| g.has_edge(v, x)).count();
        hits == 0 || hits == s.len()
    })
}

/// `(g1, s, g2)` with `s` a homogeneous set of `g1`, `χ(g2) ≤ χ(g1[s])` and
/// at most `max_n` vertices after substitution. Built by blowing up one
/// vertex of a random graph into a random graph.
pub fn substitution_instance(rng: &mut impl Rng, max_n: usize) -> (Graph, VertexSet, Graph) {
    loop {
        let nh = rng.gen_range(1..=max_n - 2);
        let nx = rng.gen_range(2..=(max_n - nh + 1).min(5));
        let (ph, px) = (rng.gen_range(0.2..0.8), rng.gen_range(0.2..0.9));
        let h = random_graph(rng, nh, ph);
        let x = random_graph(rng, nx, px);
        let v = rng.gen_range(0..nh);
        let g1 = vcrit_core::structure::substitute(&h, VertexSet::from_iter([v]), &x).unwrap();
        let s: VertexSet = (nh - 1..nh - 1 + nx).collect();
        let room = max_n - (nh - 1);
        let n2 = rng.gen_range(1..=room);
        let p2 = rng.gen_range(0.1..0.9);
        let g2 = random_graph(rng, n2, p2);
        if brute_chromatic(&g2) <= brute_chromatic(&x) {
            return (g1, s, g2);
        }
    }
}

/// Constructed `(name, g1, s, g2, p)`: `g1` is `p`-vertex-critical, `s` is a
/// homogeneous set of `g1` and `g2` is `χ(g1[s])`-vertex-critical.
pub fn critical_substitutions() -> Vec<(String, Graph, VertexSet, Graph, usize)> {
    let j = |a: &str, b: &str| named(a).join(&named(b)).unwrap();
    let first = |n: usize| -> VertexSet { (0..n).collect() };
    let w7 = named("c7").join(&named("k1")).unwrap();
    let c5c5 = j("c5", "c5");
    vec![
        ("k5 k3->c5".to_string(), named("k5"), first(3), named("c5"), 5),
        ("k5 k3->c7".into(), named("k5"), first(3), named("c7"), 5),
        ("k5 k3->c9".into(), named("k5"), first(3), named("c9"), 5),
        ("k5 k4->w5".into(), named("k5"), first(4), named("w5"), 5),
        ("k5 k4->co_c7".into(), named("k5"), first(4), named("co_c7"), 5),
        ("k5 k4->w7".into(), named("k5"), first(4), w7.clone(), 5),
        ("k5 k2->k2".into(), named("k5"), first(2), named("k2"), 5),
        ("k4 k3->c5".into(), named("k4"), first(3), named("c5"), 4),
        ("k4 k3->c7".into(), named("k4"), first(3), named("c7"), 4),
        ("k4 k2->k2".into(), named("k4"), first(2), named("k2"), 4),
        ("w5 rim->c7".into(), named("w5"), first(5), named("c7"), 4),
        ("w7 rim->c5".into(), w7.clone(), first(7), named("c5"), 4),
        ("c5_join_k2 rim->c7".into(), named("c5_join_k2"), first(5), named("c7"), 5),
        ("c5_join_k2 hub->k2".into(), named("c5_join_k2"), VertexSet::from_iter([5, 6]), named("k2"), 5),
        ("c5+c5 c5->c7".into(), c5c5.clone(), first(5), named("c7"), 6),
        ("c5+c5 c5->k3".into(), c5c5, first(5), named("k3"), 6),
        ("k6 k5->c5_join_k2".into(), named("k6"), first(5), named("c5_join_k2"), 6),
        ("k6 k4->w5".into(), named("k6"), first(4), named("w5"), 6),
        ("k6 k3->c9".into(), named("k6"), first(3), named("c9"), 6),
        ("c5+k3 c5->c7".into(), j("c5", "k3"), first(5), named("c7"), 6),
    ]
}
