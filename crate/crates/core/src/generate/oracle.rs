//! Brute-force reference enumeration.
//!
//! Every family-free graph on `m` vertices arises from one on `m - 1` vertices
//! by adding a vertex, because the class is hereditary. So the oracle grows
//! all family-free graphs level by level, one per isomorphism class, and keeps
//! those that are k-vertex-critical by the definition.

use std::collections::BTreeSet;

use crate::canon::{canonical_form, CanonicalForm};
use crate::colour::chromatic_number;
use crate::detect::PatternFamily;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const ORACLE_ORDER_LIMIT: usize = 10;

/// All k-vertex-critical family-free graphs with at most `n_max` vertices,
/// sorted by canonical form.
pub fn oracle_enumerate(k: usize, family: &PatternFamily, n_max: usize) -> Result<Vec<Graph>> {
    if n_max > ORACLE_ORDER_LIMIT {
        return Err(Error::OrderTooLarge { order: n_max, max: ORACLE_ORDER_LIMIT });
    }
    let mut found: BTreeSet<CanonicalForm> = BTreeSet::new();
    let k1 = Graph::empty(1)?;
    let mut level: Vec<Graph> = if n_max >= 1 && family.is_free(&k1) { vec![k1] } else { Vec::new() };
    for m in 1..=n_max {
        for g in &level {
            if critical_by_definition(g, k) {
                found.insert(canonical_form(g));
            }
        }
        if m == n_max {
            break;
        }
        let mut next = BTreeSet::new();
        for g in &level {
            for s in 0..1u64 << m {
                let h = g.extended(VertexSet(s));
                if family.is_free(&h) {
                    next.insert(canonical_form(&h));
                }
            }
        }
        level = next.iter().map(CanonicalForm::to_graph).collect();
    }
    Ok(found.iter().map(CanonicalForm::to_graph).collect())
}

fn critical_by_definition(g: &Graph, k: usize) -> bool {
    chromatic_number(g) == k && (0..g.order()).all(|v| chromatic_number(&g.delete_vertex(v)) < k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::NamedGraph;

    fn named(s: &str) -> Graph {
        s.parse::<NamedGraph>().unwrap().build().unwrap()
    }

    #[test]
    fn small_cases() {
        let odd = oracle_enumerate(3, &PatternFamily::empty(), 7).unwrap();
        assert_eq!(odd.len(), 3);
        for n in [3, 5, 7] {
            assert!(odd.iter().any(|g| are_isomorphic(g, &named(&format!("c{n}")))));
        }
        let four = oracle_enumerate(4, &PatternFamily::empty(), 4).unwrap();
        assert_eq!(four.len(), 1);
        assert!(are_isomorphic(&four[0], &named("k4")));
        assert!(oracle_enumerate(3, &PatternFamily::empty(), 11).is_err());
    }
}
