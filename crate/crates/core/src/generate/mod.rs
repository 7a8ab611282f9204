//! Seeded exhaustive generation of k-vertex-critical graphs in a hereditary
//! class, and a brute-force oracle to check it against.
//!
//! Starting from a seed `I`, vertices are added one at a time in every way
//! allowed by the pruning rules, level by level. A graph that is not
//! `(k-1)`-colourable can only be a proper induced subgraph of a
//! k-vertex-critical graph if it has chromatic number below `k`, which it does
//! not, so such a graph is tested as an output and never extended.
//!
//! The forcing rules pick one violated structural condition of the current
//! node and only add vertices that resolve it. Any k-vertex-critical graph
//! containing the node must contain such a vertex, so adding it first loses
//! nothing.

mod checkpoint;
mod extend;
mod oracle;

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm, SeenStore};
use crate::critical::{is_k_vertex_critical, is_vertex_critical};
use crate::detect::{find_induced, PatternFamily};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use checkpoint::Checkpoint;
pub use extend::Forcing;
pub use oracle::{oracle_enumerate, ORACLE_ORDER_LIMIT};

use extend::{puncture, violated_constraints, ColourOracle, Cubes, ExtendCounts, PunctedPattern};

/// Pruning rules. All are on by default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rules {
    pub iso_dedup: bool,
    pub family_free: bool,
    pub colour_bound: bool,
    pub comparable_forcing: bool,
    pub lemma3_forcing: bool,
    pub lemma3_cap: usize,
    /// A vertex of degree below `k - 1` needs a new neighbour.
    pub degree_forcing: bool,
    /// Branch on the violated condition with the fewest surviving children
    /// rather than the first one found.
    pub smallest_branch: bool,
}

impl Default for Rules {
    fn default() -> Self {
        Rules {
            iso_dedup: true,
            family_free: true,
            colour_bound: true,
            comparable_forcing: true,
            lemma3_forcing: true,
            lemma3_cap: 2,
            degree_forcing: true,
            smallest_branch: true,
        }
    }
}

impl Rules {
    pub const TAGS: [&'static str; 7] = [
        "iso-dedup",
        "family-free",
        "colour-bound",
        "comparable-forcing",
        "lemma3-forcing",
        "degree-forcing",
        "smallest-branch",
    ];

    /// Isomorph rejection, family-freeness, the colour bound and comparable
    /// forcing only.
    pub fn basic() -> Self {
        Rules { lemma3_forcing: false, degree_forcing: false, smallest_branch: false, ..Rules::default() }
    }

    pub fn none() -> Self {
        Rules {
            iso_dedup: false,
            family_free: false,
            colour_bound: false,
            comparable_forcing: false,
            lemma3_forcing: false,
            lemma3_cap: 2,
            degree_forcing: false,
            smallest_branch: false,
        }
    }

    fn flag(&mut self, tag: &str) -> Result<&mut bool> {
        Ok(match tag {
            "iso-dedup" => &mut self.iso_dedup,
            "family-free" => &mut self.family_free,
            "colour-bound" => &mut self.colour_bound,
            "comparable-forcing" => &mut self.comparable_forcing,
            "lemma3-forcing" => &mut self.lemma3_forcing,
            "degree-forcing" => &mut self.degree_forcing,
            "smallest-branch" => &mut self.smallest_branch,
            other => return Err(Error::InvalidParameter(format!("unknown rule `{other}`"))),
        })
    }

    pub fn set(&mut self, tag: &str, on: bool) -> Result<()> {
        *self.flag(tag)? = on;
        Ok(())
    }

    pub fn enabled(&self) -> Vec<&'static str> {
        let mut me = self.clone();
        Self::TAGS.iter().copied().filter(|t| *me.flag(t).unwrap()).collect()
    }
}

impl fmt::Display for Rules {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let on = self.enabled();
        if on.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&on.join(","))
        }
    }
}

/// Comma-separated rule tags, or `none`.
impl FromStr for Rules {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut r = Rules::none();
        for t in s.split(',').map(str::trim).filter(|t| !t.is_empty() && *t != "none") {
            r.set(t, true)?;
        }
        Ok(r)
    }
}

/// Limits after which a run stops and reports partial results.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct GenerationTask {
    pub k: usize,
    pub family: PatternFamily,
    pub seed: Graph,
    pub max_order: Option<usize>,
    pub rules: Rules,
    pub workers: usize,
    pub budget: Budget,
    /// Written after every completed level.
    pub checkpoint: Option<PathBuf>,
}

impl GenerationTask {
    pub fn new(k: usize, family: PatternFamily, seed: Graph) -> Self {
        GenerationTask {
            k,
            family,
            seed,
            max_order: None,
            rules: Rules::default(),
            workers: 1,
            budget: Budget::default(),
            checkpoint: None,
        }
    }

    pub fn with_max_order(mut self, n: usize) -> Self {
        self.max_order = Some(n);
        self
    }

    pub fn with_rules(mut self, rules: Rules) -> Self {
        self.rules = rules;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::InvalidParameter(format!("k must be at least 2, got {}", self.k)));
        }
        if let Some((p, _)) = self.family.find_any(&self.seed) {
            return Err(Error::SeedNotFamilyFree(p.name().to_string()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidParameter("workers must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SearchStats {
    /// Graphs whose children were enumerated.
    pub nodes_expanded: u64,
    /// Graphs tested as outputs (not `(k-1)`-colourable).
    pub candidates_tested: u64,
    /// Children that passed the family and forcing filters.
    pub children: u64,
    pub iso_rejections: u64,
    /// Branches cut because the new vertex completed a forbidden pattern.
    pub family_cuts: u64,
    /// Children not extended because they are not `(k-1)`-colourable.
    pub colour_prunes: u64,
    pub comparable_forced: u64,
    pub lemma3_forced: u64,
    pub degree_forced: u64,
    pub outputs: u64,
    pub largest_order: usize,
    pub max_order: Option<usize>,
    pub elapsed: Duration,
    /// `(order, nodes)` for every level the search entered.
    pub levels: Vec<(usize, usize)>,
}

impl SearchStats {
    /// `key=value` lines.
    pub fn to_lines(&self) -> String {
        let cap = self.max_order.map_or("none".to_string(), |c| c.to_string());
        format!(
            "nodes_expanded={}\ncandidates_tested={}\nchildren={}\niso_rejections={}\nfamily_cuts={}\ncolour_prunes={}\n\
             comparable_forced={}\nlemma3_forced={}\ndegree_forced={}\noutputs={}\nlargest_order={}\nmax_order={}\nelapsed_seconds={:.3}\n",
            self.nodes_expanded,
            self.candidates_tested,
            self.children,
            self.iso_rejections,
            self.family_cuts,
            self.colour_prunes,
            self.comparable_forced,
            self.lemma3_forced,
            self.degree_forced,
            self.outputs,
            self.largest_order,
            cap,
            self.elapsed.as_secs_f64()
        ) + &self.levels.iter().map(|(o, c)| format!("level_{o}={c}\n")).collect::<String>()
    }
}

/// Why a run stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stop {
    /// Search space exhausted: the output is complete.
    Exhausted,
    /// Nodes remained at the order cap; complete only up to the cap.
    OrderCap,
    Budget,
}

#[derive(Clone, Debug)]
pub struct Generation {
    /// Outputs, sorted by canonical form.
    pub graphs: Vec<Graph>,
    pub forms: Vec<CanonicalForm>,
    pub stats: SearchStats,
    pub stop: Stop,
}

impl Generation {
    pub fn is_exhaustive(&self) -> bool {
        self.stop == Stop::Exhausted
    }
}

/// Children of one node: graphs to extend further and output candidates.
#[derive(Clone, Debug, Default)]
pub struct Children {
    pub recurse: Vec<Graph>,
    pub candidates: Vec<Graph>,
}

#[derive(Default)]
struct Counters {
    nodes_expanded: AtomicU64,
    candidates_tested: AtomicU64,
    children: AtomicU64,
    iso_rejections: AtomicU64,
    family_cuts: AtomicU64,
    colour_prunes: AtomicU64,
    comparable_forced: AtomicU64,
    lemma3_forced: AtomicU64,
    degree_forced: AtomicU64,
    largest_order: AtomicUsize,
    levels: Mutex<Vec<(usize, usize)>>,
}

impl Counters {
    fn add(&self, c: &AtomicU64, by: u64) {
        c.fetch_add(by, Ordering::Relaxed);
    }

    fn snapshot(&self, outputs: usize, max_order: Option<usize>, elapsed: Duration) -> SearchStats {
        let g = |c: &AtomicU64| c.load(Ordering::Relaxed);
        SearchStats {
            nodes_expanded: g(&self.nodes_expanded),
            candidates_tested: g(&self.candidates_tested),
            children: g(&self.children),
            iso_rejections: g(&self.iso_rejections),
            family_cuts: g(&self.family_cuts),
            colour_prunes: g(&self.colour_prunes),
            comparable_forced: g(&self.comparable_forced),
            lemma3_forced: g(&self.lemma3_forced),
            degree_forced: g(&self.degree_forced),
            outputs: outputs as u64,
            largest_order: self.largest_order.load(Ordering::Relaxed),
            max_order,
            elapsed,
            levels: self.levels.lock().unwrap().clone(),
        }
    }

    fn absorb(&self, s: &SearchStats) {
        self.add(&self.nodes_expanded, s.nodes_expanded);
        self.add(&self.candidates_tested, s.candidates_tested);
        self.add(&self.children, s.children);
        self.add(&self.iso_rejections, s.iso_rejections);
        self.add(&self.family_cuts, s.family_cuts);
        self.add(&self.colour_prunes, s.colour_prunes);
        self.add(&self.comparable_forced, s.comparable_forced);
        self.add(&self.lemma3_forced, s.lemma3_forced);
        self.add(&self.degree_forced, s.degree_forced);
        self.largest_order.fetch_max(s.largest_order, Ordering::Relaxed);
    }
}

struct Engine<'a> {
    task: &'a GenerationTask,
    punctured: Vec<PunctedPattern>,
    counters: Counters,
}

impl<'a> Engine<'a> {
    fn new(task: &'a GenerationTask) -> Self {
        Engine { task, punctured: puncture(&task.family), counters: Counters::default() }
    }

    /// Enumerates the children of `g` and splits them by colourability.
    fn expand(&self, g: &Graph, mut recurse: impl FnMut(Graph), mut candidate: impl FnMut(Graph)) {
        let task = self.task;
        let c = &self.counters;
        c.add(&c.nodes_expanded, 1);
        let cubes = Cubes::new(g, &self.punctured, task.rules.family_free);
        let forcing = self.pick(g, &cubes);
        match forcing {
            Forcing::Comparable { .. } => c.add(&c.comparable_forced, 1),
            Forcing::Lemma3 { .. } => c.add(&c.lemma3_forced, 1),
            Forcing::LowDegree { .. } => c.add(&c.degree_forced, 1),
            Forcing::Free => {}
        }
        let oracle = ColourOracle::new(g, task.k - 1);
        let mut counts = ExtendCounts::default();
        cubes.walk(forcing, &mut counts, &mut |s| {
            let child = g.extended(VertexSet(s));
            if !oracle.child_colourable(&child, s) {
                c.add(&c.colour_prunes, 1);
                if task.rules.colour_bound {
                    candidate(child);
                    return true;
                }
                candidate(child.clone());
            }
            recurse(child);
            true
        });
        c.add(&c.family_cuts, counts.family_cuts);
        c.add(&c.children, counts.candidates);
        c.largest_order.fetch_max(g.order() + 1, Ordering::Relaxed);
    }

    fn pick(&self, g: &Graph, cubes: &Cubes) -> Forcing {
        let all = violated_constraints(g, self.task.k, &self.task.rules);
        if !self.task.rules.smallest_branch || all.len() <= 1 {
            return all.first().copied().unwrap_or(Forcing::Free);
        }
        let mut best = all[0];
        let mut best_count = u64::MAX;
        for &f in &all {
            if let Some(c) = cubes.count(f, best_count.saturating_sub(1)) {
                best = f;
                best_count = c;
                if c == 0 {
                    break;
                }
            }
        }
        best
    }

    fn is_output(&self, g: &Graph) -> bool {
        self.counters.add(&self.counters.candidates_tested, 1);
        is_vertex_critical(g, self.task.k) && self.task.family.is_free(g)
    }
}

/// Children of `g` under the task's rules, each class once.
pub fn extend_children(g: &Graph, task: &GenerationTask) -> Result<Children> {
    if let Some((p, _)) = task.family.find_any(g) {
        return Err(Error::NotFamilyFree(p.name().to_string()));
    }
    let engine = Engine::new(task);
    let rec = SeenStore::new();
    let cand = SeenStore::new();
    let mut out = Children::default();
    let mut r = Vec::new();
    let mut cs = Vec::new();
    engine.expand(g, |h| r.push(h), |h| cs.push(h));
    for h in r {
        if rec.insert(canonical_form(&h)) {
            out.recurse.push(h);
        }
    }
    for h in cs {
        if cand.insert(canonical_form(&h)) {
            out.candidates.push(h);
        }
    }
    Ok(out)
}

/// Runs the search to completion, to the order cap, or until the budget runs out.
pub fn generate(task: &GenerationTask) -> Result<Generation> {
    task.validate()?;
    let engine = Engine::new(task);
    let mut outputs = BTreeSet::new();
    let seed = task.seed.clone();
    let mut frontier = Vec::new();
    let seed_colourable = crate::colour::is_k_colourable(&seed, task.k - 1);
    if !seed_colourable {
        engine.counters.add(&engine.counters.colour_prunes, 1);
        if engine.is_output(&seed) {
            outputs.insert(canonical_form(&seed));
        }
    }
    if seed_colourable || !task.rules.colour_bound {
        frontier.push(seed);
    }
    engine.counters.largest_order.fetch_max(task.seed.order(), Ordering::Relaxed);
    run_levels(&engine, frontier, outputs, Instant::now(), Duration::ZERO)
}

/// Continues a run from a checkpoint written by an earlier run of the same task.
pub fn resume(task: &GenerationTask, cp: &Checkpoint) -> Result<Generation> {
    task.validate()?;
    cp.matches(task)?;
    let engine = Engine::new(task);
    engine.counters.absorb(&cp.stats);
    let frontier = cp.frontier.iter().map(CanonicalForm::to_graph).collect();
    run_levels(&engine, frontier, cp.outputs.iter().cloned().collect(), Instant::now(), cp.stats.elapsed)
}

fn run_levels(
    engine: &Engine<'_>,
    mut frontier: Vec<Graph>,
    outputs: BTreeSet<CanonicalForm>,
    start: Instant,
    already: Duration,
) -> Result<Generation> {
    let task = engine.task;
    let outputs = Mutex::new(outputs);
    let over_budget = AtomicBool::new(false);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(task.workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
    let mut stop = Stop::Exhausted;
    let budget_hit = |nodes: u64| {
        task.budget.max_nodes.is_some_and(|m| nodes >= m)
            || task.budget.max_seconds.is_some_and(|s| (already + start.elapsed()).as_secs_f64() >= s)
    };

    while !frontier.is_empty() {
        let order = frontier[0].order();
        engine.counters.levels.lock().unwrap().push((order, frontier.len()));
        if std::env::var_os("VCRIT_TRACE").is_some() {
            eprintln!("level {order}: {} nodes, {:.1}s", frontier.len(), (already + start.elapsed()).as_secs_f64());
        }
        if task.max_order.is_some_and(|m| order >= m) {
            stop = Stop::OrderCap;
            break;
        }
        let next = SeenStore::new();
        let next_plain = Mutex::new(Vec::new());
        let tested = SeenStore::new();
        let work = |g: &Graph| {
            if over_budget.load(Ordering::Relaxed) {
                return;
            }
            if budget_hit(engine.counters.nodes_expanded.load(Ordering::Relaxed)) {
                over_budget.store(true, Ordering::Relaxed);
                return;
            }
            let mut plain = Vec::new();
            engine.expand(
                g,
                |h| {
                    if task.rules.iso_dedup {
                        if !next.insert(canonical_form(&h)) {
                            engine.counters.add(&engine.counters.iso_rejections, 1);
                        }
                    } else {
                        plain.push(h);
                    }
                },
                |h| {
                    let f = canonical_form(&h);
                    if tested.insert(f.clone()) && engine.is_output(&h) {
                        outputs.lock().unwrap().insert(f);
                    }
                },
            );
            if !plain.is_empty() {
                next_plain.lock().unwrap().extend(plain);
            }
        };
        if task.workers == 1 {
            frontier.iter().for_each(work);
        } else {
            pool.install(|| frontier.par_iter().for_each(work));
        }
        if over_budget.load(Ordering::Relaxed) {
            stop = Stop::Budget;
            break;
        }
        frontier = if task.rules.iso_dedup {
            next.sorted().iter().map(CanonicalForm::to_graph).collect()
        } else {
            next_plain.into_inner().unwrap()
        };
        if let Some(path) = &task.checkpoint {
            let outs = outputs.lock().unwrap();
            let stats = engine.counters.snapshot(outs.len(), task.max_order, already + start.elapsed());
            Checkpoint::capture(task, &frontier, &outs, stats).write(path)?;
        }
    }

    let forms: Vec<CanonicalForm> = outputs.into_inner().unwrap().into_iter().collect();
    let graphs: Vec<Graph> = forms.iter().map(CanonicalForm::to_graph).collect();
    verify_outputs(task, &graphs)?;
    let stats = engine.counters.snapshot(forms.len(), task.max_order, already + start.elapsed());
    Ok(Generation { graphs, forms, stats, stop })
}

/// Re-checks every output against the definitions.
pub fn verify_outputs(task: &GenerationTask, graphs: &[Graph]) -> Result<()> {
    for g in graphs {
        let r = is_k_vertex_critical(g, task.k);
        if !r.is_critical {
            return Err(Error::Unsound(format!("{g} is not {}-vertex-critical", task.k)));
        }
        if let Some((p, _)) = task.family.find_any(g) {
            return Err(Error::Unsound(format!("{g} contains an induced {}", p.name())));
        }
        if find_induced(g, &task.seed).is_none() {
            return Err(Error::Unsound(format!("{g} does not contain the seed")));
        }
    }
    Ok(())
}
