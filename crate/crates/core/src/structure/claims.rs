//! The structural claims about a 5-vertex-critical (P6, bull)-free graph
//! around an induced five-cycle, evaluated on a concrete graph.
//!
//! Claims are numbered 1 to 44. Those listed in [`ASSUME_CLASS_CLAIMS`] only
//! hold once finitely many exceptional graphs are set aside, so a failure
//! there is reported as [`ClaimStatus::AssumeClass`] rather than
//! [`ClaimStatus::Violated`].

use std::fmt;

use crate::detect::Pattern;
use crate::error::Result;
use crate::graph::{Graph, NamedGraph, VertexSet};

use super::decomposition::{c5_partition, C5Decomposition};
use super::homogeneous_sets;

pub const CLAIM_COUNT: usize = 44;

pub const ASSUME_CLASS_CLAIMS: [usize; 18] =
    [1, 5, 25, 28, 29, 30, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimStatus {
    Holds,
    Violated,
    /// The claim is conditional and its hypothesis never applies.
    NotApplicable,
    /// An assume-class claim fails.
    AssumeClass,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Holds => "holds",
            ClaimStatus::Violated => "violated",
            ClaimStatus::NotApplicable => "not-applicable",
            ClaimStatus::AssumeClass => "assume-class",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: usize,
    pub status: ClaimStatus,
    /// Offending vertices; empty unless the claim fails.
    pub witness: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub q: [usize; 5],
    pub results: Vec<ClaimResult>,
}

impl ClaimReport {
    pub fn get(&self, id: usize) -> &ClaimResult {
        &self.results[id - 1]
    }

    pub fn violations(&self) -> impl Iterator<Item = &ClaimResult> {
        self.results.iter().filter(|r| r.status == ClaimStatus::Violated)
    }

    pub fn assume_class_failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.results.iter().filter(|r| r.status == ClaimStatus::AssumeClass)
    }

    pub fn all_unconditional_hold(&self) -> bool {
        self.violations().next().is_none()
    }

    /// One `claimNN<TAB>status<TAB>witness` line per claim.
    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let w = if r.witness.is_empty() {
                "-".to_string()
            } else {
                r.witness.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            };
            s.push_str(&format!("claim{:02}\t{}\t{}\n", r.id, r.status, w));
        }
        s
    }
}

enum Outcome {
    Holds,
    Vacuous,
    Fails(VertexSet),
}

fn pair(a: usize, b: usize) -> VertexSet {
    VertexSet::from_iter([a, b])
}

fn first_edge(g: &Graph, x: VertexSet, y: VertexSet) -> Option<VertexSet> {
    x.iter().find_map(|a| g.neighbours(a).intersection(y).first().map(|b| pair(a, b)))
}

fn first_non_edge(g: &Graph, x: VertexSet, y: VertexSet) -> Option<VertexSet> {
    x.iter().find_map(|a| {
        y.difference(g.neighbours(a)).difference(VertexSet::singleton(a)).first().map(|b| pair(a, b))
    })
}

fn impure(g: &Graph, x: VertexSet, y: VertexSet) -> Option<VertexSet> {
    match (first_edge(g, x, y), first_non_edge(g, x, y)) {
        (Some(e), Some(n)) => Some(e.union(n)),
        _ => None,
    }
}

fn components_impure(g: &Graph, x: VertexSet, y: VertexSet) -> Option<VertexSet> {
    let cy = g.components(y);
    g.components(x).into_iter().find_map(|a| cy.iter().find_map(|&b| impure(g, a, b)))
}

/// A vertex outside `x` mixed on `x`, with one neighbour and one non-neighbour.
fn splitter(g: &Graph, x: VertexSet) -> Option<VertexSet> {
    g.vertices().difference(x).iter().find_map(|v| {
        let hit = g.neighbours(v).intersection(x);
        let miss = x.difference(hit);
        match (hit.first(), miss.first()) {
            (Some(a), Some(b)) => Some(VertexSet::from_iter([v, a, b])),
            _ => None,
        }
    })
}

fn not_small_clique(g: &Graph, x: VertexSet, max: usize) -> Option<VertexSet> {
    first_non_edge(g, x, x).or_else(|| (x.len() > max).then_some(x))
}

fn fails(w: Option<VertexSet>) -> Outcome {
    match w {
        Some(w) => Outcome::Fails(w),
        None => Outcome::Holds,
    }
}

/// Runs `f` for `i = 0..5`, stopping at the first failure.
fn each_i(mut f: impl FnMut(usize) -> Option<VertexSet>) -> Outcome {
    fails((0..5).find_map(&mut f))
}

/// Graph-level data reused across several five-cycles of the same graph.
pub struct ClaimAuditor<'g> {
    g: &'g Graph,
    homogeneous: Vec<VertexSet>,
    f2: Option<VertexSet>,
    f345: Option<VertexSet>,
    f6: Option<VertexSet>,
}

impl<'g> ClaimAuditor<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let find = |names: &[u8]| {
            names.iter().find_map(|&i| {
                let p = Pattern::named(NamedGraph::F(i)).expect("fixed graph");
                p.find_in(g).map(|e| e.image())
            })
        };
        ClaimAuditor { g, homogeneous: homogeneous_sets(g), f2: find(&[2]), f345: find(&[3, 4, 5]), f6: find(&[6]) }
    }

    pub fn audit(&self, q: [usize; 5]) -> Result<ClaimReport> {
        let d = c5_partition(self.g, q)?;
        let results = (1..=CLAIM_COUNT)
            .map(|id| {
                let (status, witness) = match self.claim(id, &d) {
                    Outcome::Holds => (ClaimStatus::Holds, VertexSet::EMPTY),
                    Outcome::Vacuous => (ClaimStatus::NotApplicable, VertexSet::EMPTY),
                    Outcome::Fails(w) if ASSUME_CLASS_CLAIMS.contains(&id) => (ClaimStatus::AssumeClass, w),
                    Outcome::Fails(w) => (ClaimStatus::Violated, w),
                };
                ClaimResult { id, status, witness }
            })
            .collect();
        Ok(ClaimReport { q, results })
    }

    fn claim(&self, id: usize, d: &C5Decomposition) -> Outcome {
        let g = self.g;
        let m = |i: usize, j: isize| (i as isize + j).rem_euclid(5) as usize;
        let (s0, s5) = (d.s0, d.s5);
        let (s1, s2, s3, s4) = (&d.s1, &d.s2, &d.s3, &d.s4);
        let all1 = d.s1_all();
        let all2 = d.s2_all();
        let all3 = d.s3_all();
        let all4 = d.s4_all();
        match id {
            1 => fails(self.homogeneous.iter().find(|&&x| not_small_clique(g, x, 3).is_some()).copied()),
            2 => fails((!d.unclassified.is_empty()).then_some(d.unclassified)),
            3 => fails(first_edge(g, s0, all1.union(all3).union(all4))),
            4 => each_i(|i| components_impure(g, s0, s2[i])),
            5 => fails(first_edge(g, s5, s5)),
            6 => fails(first_non_edge(g, s5, all1.union(all2))),
            7 => each_i(|i| {
                first_non_edge(g, s1[i], s1[m(i, 2)].union(s1[m(i, -2)]))
                    .or_else(|| first_edge(g, s1[i], s1[m(i, 1)].union(s1[m(i, -1)])))
            }),
            8 => each_i(|i| components_impure(g, s1[i], s2[i])),
            9 => each_i(|i| first_edge(g, s1[i], s2[m(i, 1)].union(s2[m(i, -1)]))),
            10 => each_i(|i| {
                [m(i, 2), m(i, -2)].iter().find_map(|&j| g.components(s2[j]).into_iter().find_map(|c| impure(g, s1[i], c)))
            }),
            11 => each_i(|i| first_non_edge(g, s1[i], s3[i]).or_else(|| first_edge(g, s1[i], all3.difference(s3[i])))),
            12 => each_i(|i| {
                let rest = all4.difference(s4[i]);
                (!s1[i].is_empty() && !rest.is_empty()).then(|| pair(s1[i].first().unwrap(), rest.first().unwrap()))
            }),
            13 => each_i(|i| first_edge(g, s1[i], s4[i])),
            14 => each_i(|i| g.components(s1[i]).into_iter().find_map(|c| splitter(g, c))),
            15 => each_i(|i| {
                let comps = g.components(s1[i]);
                for (a, &ca) in comps.iter().enumerate() {
                    for &cb in &comps[a + 1..] {
                        for v1 in ca.union(cb) {
                            let other = if ca.contains(v1) { cb } else { ca };
                            for v2 in other {
                                let bad = g
                                    .neighbours(v1)
                                    .difference(g.neighbours(v2))
                                    .difference(s1[i])
                                    .difference(s2[i])
                                    .difference(VertexSet::singleton(v2));
                                if let Some(v3) = bad.first() {
                                    return Some(VertexSet::from_iter([v1, v2, v3]));
                                }
                            }
                        }
                    }
                }
                None
            }),
            16 => each_i(|i| components_impure(g, s2[i], s2[m(i, 1)]).or_else(|| components_impure(g, s2[i], s2[m(i, -1)]))),
            17 => each_i(|i| first_edge(g, s2[i], s2[m(i, 2)].union(s2[m(i, -2)]))),
            18 => each_i(|i| {
                first_non_edge(g, s2[i], s3[m(i, 1)].union(s3[m(i, -1)]))
                    .or_else(|| first_edge(g, s2[i], s3[m(i, 2)].union(s3[m(i, -2)])))
            }),
            19 => each_i(|i| first_non_edge(g, s2[i], all4.difference(s4[i]))),
            20 => each_i(|i| first_edge(g, s2[i], all4)),
            21 => each_i(|i| {
                let rest = all4.difference(s4[i]);
                (!s2[i].is_empty() && !rest.is_empty()).then(|| pair(s2[i].first().unwrap(), rest.first().unwrap()))
            }),
            22 => each_i(|i| {
                g.components(s2[i]).into_iter().filter(|&c| g.is_anticomplete_to(c, s3[i])).find_map(|c| splitter(g, c))
            }),
            23 => each_i(|i| first_non_edge(g, s3[i], s3[m(i, 1)])),
            24 => each_i(|i| first_non_edge(g, s4[i], s4[i])),
            25 => each_i(|i| (s4[i].len() > 2).then_some(s4[i])),
            26 => fails(s5.iter().filter(|&v| g.neighbours(v).intersects(s0)).find_map(|v| {
                first_non_edge(g, VertexSet::singleton(v), all3.union(all4))
            })),
            27 => each_i(|i| {
                s0.iter().filter(|&v| g.neighbours(v).intersects(s2[i])).find_map(|v| first_non_edge(g, VertexSet::singleton(v), s5))
            }),
            28 => fails((!s5.is_empty() && !s0.is_empty()).then(|| pair(s5.first().unwrap(), s0.first().unwrap()))),
            29 => fails(self.f2.or((!s5.is_empty()).then_some(s5))),
            30 => fails(g.components(s0).into_iter().find_map(|c| splitter(g, c))),
            31 => each_i(|i| {
                s2[i]
                    .iter()
                    .filter(|&v| !s1[i].difference(g.neighbours(v)).is_empty())
                    .find_map(|v| first_edge(g, VertexSet::singleton(v), s3[i]))
            }),
            32 => each_i(|i| {
                s2[i].iter().filter(|&v| g.neighbours(v).intersects(s0)).find_map(|v| first_edge(g, VertexSet::singleton(v), s3[i]))
            }),
            33 => self.when_a_split(d, true, |i| {
                g.components(d.a(i)).into_iter().find_map(|c| splitter(g, c).or_else(|| not_small_clique(g, c, 3)))
            }),
            34 => self.when_a_split(d, false, |i| not_small_clique(g, d.a(i), 3)),
            35 => each_i(|i| first_edge(g, s2[i], s3[i])),
            36 => each_i(|i| not_small_clique(g, s3[i], 2)),
            37 => {
                let first = each_i(|i| first_edge(g, s1[i], s0));
                if let Outcome::Fails(_) = first {
                    return first;
                }
                self.when_a_split(d, true, |i| {
                    let mut comps = g.components(d.a(i));
                    comps.extend(g.components(d.b(i)));
                    comps.into_iter().find_map(|c| splitter(g, c).or_else(|| not_small_clique(g, c, 3)))
                })
            }
            38 => self.when_a_split(d, true, |i| {
                self.ab_parts(d, i).into_iter().find_map(|(z, x, y)| {
                    g.vertices().difference(z).iter().find_map(|v| {
                        let sv = VertexSet::singleton(v);
                        impure(g, sv, x).or_else(|| impure(g, sv, y))
                    })
                })
            }),
            39 => self.when_a_split(d, true, |i| {
                self.ab_parts(d, i)
                    .into_iter()
                    .find_map(|(z, x, y)| (g.components(x).len() > 1 || g.components(y).len() > 1).then_some(z))
            }),
            40 => self.when_a_split(d, false, |i| not_small_clique(g, s1[i], 3)),
            41 => each_i(|i| first_edge(g, s1[i], s2[i])),
            42 => each_i(|i| not_small_clique(g, s1[i], 3)),
            43 => fails(self.f345),
            44 => fails(self.f6),
            _ => unreachable!("claim ids run from 1 to {CLAIM_COUNT}"),
        }
    }

    /// Evaluates `f` on the indices where `A(i)` has at least two components
    /// (`split`) or exactly one (`!split`); vacuous if there are none.
    fn when_a_split(&self, d: &C5Decomposition, split: bool, f: impl Fn(usize) -> Option<VertexSet>) -> Outcome {
        let idx: Vec<usize> = (0..5).filter(|&i| (self.g.components(d.a(i)).len() >= 2) == split).collect();
        if idx.is_empty() {
            return Outcome::Vacuous;
        }
        fails(idx.into_iter().find_map(f))
    }

    /// Components `Z` of `A(i) ∪ B(i)` with `X = Z ∩ A(i)` and `Y = Z ∩ B(i)`.
    fn ab_parts(&self, d: &C5Decomposition, i: usize) -> Vec<(VertexSet, VertexSet, VertexSet)> {
        let (a, b) = (d.a(i), d.b(i));
        self.g.components(a.union(b)).into_iter().map(|z| (z, z.intersection(a), z.intersection(b))).collect()
    }
}

/// Audits `g` around the induced five-cycle `q`.
pub fn audit_claims(g: &Graph, q: [usize; 5]) -> Result<ClaimReport> {
    ClaimAuditor::new(g).audit(q)
}
