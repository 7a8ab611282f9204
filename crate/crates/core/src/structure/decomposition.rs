use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The vertices outside an induced five-cycle `Q = (u0, ..., u4)`, classified
/// by their neighbourhood on `Q`. Indices are taken mod 5.
///
/// * `s1[i]`: adjacent to `u_i` only
/// * `s2[i]`: adjacent to `u_{i-1}` and `u_{i+1}`
/// * `s3[i]`: adjacent to `u_{i-1}`, `u_i` and `u_{i+1}`
/// * `s4[i]`: adjacent to all of `Q` but `u_i`
/// * `s5`: adjacent to all of `Q`, `s0`: adjacent to none of it
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C5Decomposition {
    pub q: [usize; 5],
    pub s0: VertexSet,
    pub s1: [VertexSet; 5],
    pub s2: [VertexSet; 5],
    pub s3: [VertexSet; 5],
    pub s4: [VertexSet; 5],
    pub s5: VertexSet,
    pub unclassified: VertexSet,
}

impl C5Decomposition {
    pub fn q_set(&self) -> VertexSet {
        self.q.iter().copied().collect()
    }

    pub fn u(&self, i: usize) -> usize {
        self.q[i % 5]
    }

    fn union(sets: &[VertexSet; 5]) -> VertexSet {
        sets.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b))
    }

    pub fn s1_all(&self) -> VertexSet {
        Self::union(&self.s1)
    }

    pub fn s2_all(&self) -> VertexSet {
        Self::union(&self.s2)
    }

    pub fn s3_all(&self) -> VertexSet {
        Self::union(&self.s3)
    }

    pub fn s4_all(&self) -> VertexSet {
        Self::union(&self.s4)
    }

    /// `{u_i} ∪ S2(i) ∪ S3(i)`.
    pub fn a(&self, i: usize) -> VertexSet {
        let i = i % 5;
        VertexSet::singleton(self.q[i]).union(self.s2[i]).union(self.s3[i])
    }

    /// `S1(i) ∪ S0`.
    pub fn b(&self, i: usize) -> VertexSet {
        self.s1[i % 5].union(self.s0)
    }

    /// The neighbourhood pattern on `Q` that defines each class, as a bitmask
    /// over rim positions.
    pub fn pattern_mask(class: usize, i: usize) -> u8 {
        let bit = |j: usize| 1u8 << (j % 5);
        match class {
            0 => 0,
            1 => bit(i),
            2 => bit(i + 4) | bit(i + 1),
            3 => bit(i + 4) | bit(i) | bit(i + 1),
            4 => 0b11111 & !bit(i),
            _ => 0b11111,
        }
    }

    /// Rim positions adjacent to `v`, as a bitmask.
    pub fn rim_mask(&self, g: &Graph, v: usize) -> u8 {
        let mut m = 0u8;
        for (j, &u) in self.q.iter().enumerate() {
            if g.has_edge(v, u) {
                m |= 1 << j;
            }
        }
        m
    }

    /// Whether every classified vertex has exactly the pattern of its class.
    pub fn reverifies(&self, g: &Graph) -> bool {
        let ok = |s: VertexSet, class: usize, i: usize| {
            s.iter().all(|v| self.rim_mask(g, v) == Self::pattern_mask(class, i))
        };
        let mut covered = self.q_set().union(self.s0).union(self.s5).union(self.unclassified);
        for i in 0..5 {
            if !(ok(self.s1[i], 1, i) && ok(self.s2[i], 2, i) && ok(self.s3[i], 3, i) && ok(self.s4[i], 4, i)) {
                return false;
            }
            covered = covered.union(self.s1[i]).union(self.s2[i]).union(self.s3[i]).union(self.s4[i]);
        }
        ok(self.s0, 0, 0) && ok(self.s5, 5, 0) && covered == g.vertices()
    }
}

/// Whether `q` is an induced five-cycle of `g` in cycle order.
pub fn is_induced_c5(g: &Graph, q: &[usize; 5]) -> bool {
    let set: VertexSet = q.iter().copied().collect();
    set.len() == 5
        && q.iter().all(|&v| v < g.order())
        && (0..5).all(|i| (0..5).all(|j| i == j || g.has_edge(q[i], q[j]) == ((i + 1) % 5 == j || (j + 1) % 5 == i)))
}

pub fn c5_partition(g: &Graph, q: [usize; 5]) -> Result<C5Decomposition> {
    if !is_induced_c5(g, &q) {
        return Err(Error::NotInducedC5(q.to_vec()));
    }
    let mut d = C5Decomposition {
        q,
        s0: VertexSet::EMPTY,
        s1: [VertexSet::EMPTY; 5],
        s2: [VertexSet::EMPTY; 5],
        s3: [VertexSet::EMPTY; 5],
        s4: [VertexSet::EMPTY; 5],
        s5: VertexSet::EMPTY,
        unclassified: VertexSet::EMPTY,
    };
    let qs = d.q_set();
    'outer: for v in g.vertices().difference(qs) {
        let m = d.rim_mask(g, v);
        if m == 0 {
            d.s0.insert(v);
            continue;
        }
        if m == 0b11111 {
            d.s5.insert(v);
            continue;
        }
        for i in 0..5 {
            for (class, slot) in [(1, &mut d.s1), (2, &mut d.s2), (3, &mut d.s3), (4, &mut d.s4)] {
                if m == C5Decomposition::pattern_mask(class, i) {
                    slot[i].insert(v);
                    continue 'outer;
                }
            }
        }
        d.unclassified.insert(v);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::find_induced_c5;
    use crate::graph::NamedGraph;

    fn named(s: &str) -> Graph {
        s.parse::<NamedGraph>().unwrap().build().unwrap()
    }

    const RIM: [usize; 5] = [0, 1, 2, 3, 4];

    #[test]
    fn partition_examples() {
        let d = c5_partition(&named("c5_join_k2"), RIM).unwrap();
        assert_eq!(d.s5, VertexSet::from_iter([5, 6]));
        assert!(d.s0.is_empty() && d.unclassified.is_empty() && d.s1_all().is_empty() && d.s4_all().is_empty());

        let d = c5_partition(&named("d"), RIM).unwrap();
        assert_eq!(d.s1[0], VertexSet::singleton(5));
        assert_eq!(d.s4[0], VertexSet::singleton(6));

        let f6 = named("f6");
        let q = find_induced_c5(&f6).unwrap();
        let d = c5_partition(&f6, q).unwrap();
        assert!(d.reverifies(&f6));

        let d = c5_partition(&named("c5"), RIM).unwrap();
        assert_eq!(d.a(2), VertexSet::singleton(2));
        assert!(d.b(2).is_empty());
    }

    #[test]
    fn pairs_on_an_edge_are_unclassified() {
        let g = named("c5").extended(VertexSet::from_iter([0, 1]));
        let d = c5_partition(&g, RIM).unwrap();
        assert_eq!(d.unclassified, VertexSet::singleton(5));
        assert!(d.reverifies(&g));
    }

    #[test]
    fn rejects_non_cycles() {
        assert!(c5_partition(&named("k5"), RIM).is_err());
        assert!(c5_partition(&named("c5"), [0, 2, 4, 1, 3]).is_err());
        assert!(c5_partition(&named("c5"), [0, 1, 2, 3, 3]).is_err());
    }

    #[test]
    fn every_neighbourhood_lands_somewhere() {
        let c5 = named("c5");
        let mut unclassified = 0;
        for s in 0..32u64 {
            let g = c5.extended(VertexSet(s));
            let d = c5_partition(&g, RIM).unwrap();
            assert!(d.reverifies(&g));
            if d.unclassified.contains(5) {
                unclassified += 1;
                assert!(matches!(s.count_ones(), 2 | 3), "{s:05b}");
            }
        }
        assert_eq!(unclassified, 10);
    }
}
