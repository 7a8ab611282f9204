mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use vcrit_core::colour::chromatic_number;
use vcrit_core::critical::{clique_cutset, comparable_pair, is_vertex_critical};
use vcrit_core::detect::{induced_c5s, PatternFamily};
use vcrit_core::generate::oracle_enumerate;
use vcrit_core::structure::{
    all_homogeneous_sets, audit_claims, c5_partition, expand_k3_to_c5, homogeneous_c5s, homogeneous_triangles,
    reduce_homogeneous_c5_steps, substitute, C5Decomposition,
};
use vcrit_core::{are_isomorphic, Graph, VertexSet};

fn critical_corpus() -> Vec<(usize, Graph)> {
    let mut v = Vec::new();
    for g in oracle_enumerate(5, &PatternFamily::from_names("p6,bull").unwrap(), 9).unwrap() {
        v.push((5, g));
    }
    for g in oracle_enumerate(4, &PatternFamily::empty(), 7).unwrap() {
        v.push((4, g));
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn substitution_never_raises_chromatic_number(seed in any::<u64>()) {
        let (g1, s, g2) = substitution_instance(&mut rng(seed), 10);
        let g = substitute(&g1, s, &g2).unwrap();
        prop_assert!(g.order() <= 10);
        prop_assert!(brute_chromatic(&g) <= brute_chromatic(&g1));
    }

    #[test]
    fn substitution_round_trips(seed in any::<u64>()) {
        let (g1, s, g2) = substitution_instance(&mut rng(seed), 10);
        let g = substitute(&g1, s, &g2).unwrap();
        let inserted: VertexSet = (g.order() - g2.order()..g.order()).collect();
        prop_assert!(brute_homogeneous(&g, inserted));
        prop_assert_eq!(g.induced_subgraph(inserted).unwrap(), g2.clone());
        let back = substitute(&g, inserted, &g1.induced_subgraph(s).unwrap()).unwrap();
        prop_assert!(are_isomorphic(&back, &g1));
    }
}

#[test]
fn substituting_critical_pieces_stays_critical() {
    let cases = critical_substitutions();
    assert_eq!(cases.len(), 20);
    for (name, g1, s, g2, p) in cases {
        assert!(is_vertex_critical(&g1, p), "{name}: g1");
        assert!(brute_homogeneous(&g1, s) && s.len() >= 2, "{name}: s");
        let q = chromatic_number(&g1.induced_subgraph(s).unwrap());
        assert!(is_vertex_critical(&g2, q), "{name}: g2");
        let g = substitute(&g1, s, &g2).unwrap();
        assert!(is_vertex_critical(&g, p), "{name}");
        if g.order() <= 9 {
            assert!(brute_vertex_critical(&g, p), "{name}");
        }
    }
    let g = substitute(&named("k5"), (0..3).collect(), &named("c5")).unwrap();
    assert!(are_isomorphic(&g, &named("c5_join_k2")));
}

#[test]
fn homogeneous_sets_of_critical_graphs_are_critical() {
    let corpus = critical_corpus();
    assert!(corpus.len() > 10);
    let mut seen = 0;
    for (_, g) in &corpus {
        for s in all_homogeneous_sets(g).unwrap() {
            let sub = g.induced_subgraph(s).unwrap();
            assert!(brute_vertex_critical(&sub, brute_chromatic(&sub)), "{g} {s:?}");
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn critical_graphs_have_no_cutsets_or_comparable_pairs() {
    for (_, g) in critical_corpus() {
        assert!(g.is_connected());
        assert_eq!(comparable_pair(&g), None, "{g}");
        assert_eq!(clique_cutset(&g).unwrap(), None, "{g}");
    }
}

#[test]
fn reduction_and_expansion() {
    let fam = PatternFamily::from_names("p6,bull").unwrap();
    let mut reduced = 0;
    for (k, g) in critical_corpus() {
        let (h, steps) = reduce_homogeneous_c5_steps(&g);
        assert!(homogeneous_c5s(&h).is_empty());
        assert_eq!(h.order() + 2 * steps.len(), g.order());
        if !steps.is_empty() {
            reduced += 1;
            assert!(is_vertex_critical(&h, k));
        }
        if k == 5 {
            assert!(fam.is_free(&h));
            for t in homogeneous_triangles(&h) {
                let e = expand_k3_to_c5(&h, t).unwrap();
                assert!(fam.is_free(&e), "{h} {t:?}");
                assert!(is_vertex_critical(&e, 5));
            }
        }
        let mut cur = g.clone();
        for step in &steps {
            cur = step.result.clone();
        }
        assert_eq!(cur, h);
    }
    assert!(reduced > 0);
    let k5 = named("k5");
    let e = expand_k3_to_c5(&k5, (0..3).collect()).unwrap();
    assert!(are_isomorphic(&e, &named("c5_join_k2")));
    assert!(expand_k3_to_c5(&named("c5"), (0..3).collect()).is_err());
}

#[test]
fn c5_decomposition_partitions_the_vertices() {
    let mut r = rng(7);
    let mut checked = 0;
    while checked < 150 {
        let n = r.gen_range(5..=11);
        let g = random_graph(&mut r, n, 0.5);
        for q in induced_c5s(&g).into_iter().take(2) {
            let d = c5_partition(&g, q).unwrap();
            assert!(d.reverifies(&g));
            let parts = [d.q_set(), d.s0, d.s1_all(), d.s2_all(), d.s3_all(), d.s4_all(), d.s5, d.unclassified];
            let mut union = VertexSet::default();
            for p in parts {
                assert!(!union.intersects(p));
                union = union.union(p);
            }
            assert_eq!(union, g.vertices());
            for v in g.vertices().difference(d.q_set()).iter() {
                let hits: Vec<usize> = (0..5).filter(|&i| g.has_edge(v, q[i])).collect();
                let class = match hits.len() {
                    0 => d.s0.contains(v),
                    5 => d.s5.contains(v),
                    _ => (0..5).any(|i| {
                        let m = hits.iter().fold(0u8, |m, &j| m | 1 << j);
                        (1..=4).any(|c| C5Decomposition::pattern_mask(c, i) == m)
                    }) != d.unclassified.contains(v),
                };
                assert!(class, "{g} {q:?} {v}");
            }
            let report = audit_claims(&g, q).unwrap();
            assert_eq!(report.results.len(), 44);
            checked += 1;
        }
    }
    assert!(c5_partition(&named("c5"), [0, 2, 4, 1, 3]).is_err());
}
