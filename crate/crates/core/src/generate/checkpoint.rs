//! Resumable snapshots of a generation run.
//!
//! Text format, one record per line:
//!
//! ```text
//! vcrit-checkpoint 1
//! k 5
//! pattern p6<TAB>EhEG
//! seed F?~vw
//! max_order none
//! rules iso-dedup,family-free,colour-bound,comparable-forcing
//! stat nodes_expanded=123
//! output <canonical graph6>
//! frontier <canonical graph6>
//! digest <sha256 of all previous lines>
//! ```
//!
//! The format is versioned but not promised to stay readable across releases.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Duration;

use sha2::{Digest, Sha256};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{decode_graph6, Graph};

use super::{GenerationTask, SearchStats};

const MAGIC: &str = "vcrit-checkpoint 1";

#[derive(Clone, Debug, PartialEq)]
pub struct Checkpoint {
    pub k: usize,
    pub patterns: Vec<(String, String)>,
    pub seed: String,
    pub max_order: Option<usize>,
    pub rules: String,
    pub stats: SearchStats,
    pub outputs: Vec<CanonicalForm>,
    pub frontier: Vec<CanonicalForm>,
}

impl Checkpoint {
    pub(crate) fn capture(
        task: &GenerationTask,
        frontier: &[Graph],
        outputs: &BTreeSet<CanonicalForm>,
        stats: SearchStats,
    ) -> Self {
        let mut fr: Vec<CanonicalForm> = frontier.iter().map(canonical_form).collect();
        fr.sort();
        Checkpoint {
            k: task.k,
            patterns: task.family.patterns().iter().map(|p| (p.name().to_string(), p.graph().to_graph6())).collect(),
            seed: task.seed.to_graph6(),
            max_order: task.max_order,
            rules: task.rules.to_string(),
            stats,
            outputs: outputs.iter().cloned().collect(),
            frontier: fr,
        }
    }

    /// Errors unless this checkpoint was taken from `task` (budget, workers
    /// and order cap may differ).
    pub fn matches(&self, task: &GenerationTask) -> Result<()> {
        let pats: Vec<(String, String)> =
            task.family.patterns().iter().map(|p| (p.name().to_string(), p.graph().to_graph6())).collect();
        if self.k != task.k || self.patterns != pats || self.seed != task.seed.to_graph6() || self.rules != task.rules.to_string() {
            return Err(Error::InvalidParameter("checkpoint belongs to a different task".into()));
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{MAGIC}");
        let _ = writeln!(s, "k {}", self.k);
        for (name, g6) in &self.patterns {
            let _ = writeln!(s, "pattern {name}\t{g6}");
        }
        let _ = writeln!(s, "seed {}", self.seed);
        let _ = writeln!(s, "max_order {}", self.max_order.map_or("none".into(), |m| m.to_string()));
        let _ = writeln!(s, "rules {}", self.rules);
        for (key, v) in stat_pairs(&self.stats) {
            let _ = writeln!(s, "stat {key}={v}");
        }
        for f in &self.outputs {
            let _ = writeln!(s, "output {f}");
        }
        for f in &self.frontier {
            let _ = writeln!(s, "frontier {f}");
        }
        let digest = hex::encode(Sha256::digest(s.as_bytes()));
        let _ = writeln!(s, "digest {digest}");
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let body_end = text.rfind("digest ").ok_or_else(|| perr(0, "missing digest"))?;
        let (body, tail) = text.split_at(body_end);
        let want = tail.trim_start_matches("digest ").trim();
        if hex::encode(Sha256::digest(body.as_bytes())) != want {
            return Err(perr(0, "digest mismatch"));
        }
        let mut lines = body.lines().enumerate();
        match lines.next() {
            Some((_, MAGIC)) => {}
            _ => return Err(perr(1, "not a checkpoint (bad header)")),
        }
        let mut cp = Checkpoint {
            k: 0,
            patterns: Vec::new(),
            seed: String::new(),
            max_order: None,
            rules: String::new(),
            stats: SearchStats::default(),
            outputs: Vec::new(),
            frontier: Vec::new(),
        };
        for (i, line) in lines {
            let ln = i + 1;
            let (tag, rest) = line.split_once(' ').ok_or_else(|| perr(ln, "expected `tag value`"))?;
            match tag {
                "k" => cp.k = rest.parse().map_err(|_| perr(ln, "bad k"))?,
                "pattern" => {
                    let (n, g) = rest.split_once('\t').ok_or_else(|| perr(ln, "expected name<TAB>graph6"))?;
                    cp.patterns.push((n.to_string(), g.to_string()));
                }
                "seed" => {
                    decode_graph6(rest).map_err(|e| perr(ln, &e.to_string()))?;
                    cp.seed = rest.to_string();
                }
                "max_order" => {
                    cp.max_order = if rest == "none" { None } else { Some(rest.parse().map_err(|_| perr(ln, "bad max_order"))?) }
                }
                "rules" => cp.rules = rest.to_string(),
                "stat" => set_stat(&mut cp.stats, rest).ok_or_else(|| perr(ln, "bad stat"))?,
                "output" => cp.outputs.push(CanonicalForm::parse(rest).map_err(|e| perr(ln, &e.to_string()))?),
                "frontier" => cp.frontier.push(CanonicalForm::parse(rest).map_err(|e| perr(ln, &e.to_string()))?),
                _ => return Err(perr(ln, "unknown record")),
            }
        }
        Ok(cp)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, self.to_text())?;
        std::fs::rename(tmp, path)?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Checkpoint::parse(&std::fs::read_to_string(path)?)
    }
}

fn perr(line: usize, msg: &str) -> Error {
    Error::Parse { line, msg: msg.to_string() }
}

fn stat_pairs(s: &SearchStats) -> Vec<(&'static str, String)> {
    vec![
        ("nodes_expanded", s.nodes_expanded.to_string()),
        ("candidates_tested", s.candidates_tested.to_string()),
        ("children", s.children.to_string()),
        ("iso_rejections", s.iso_rejections.to_string()),
        ("family_cuts", s.family_cuts.to_string()),
        ("colour_prunes", s.colour_prunes.to_string()),
        ("comparable_forced", s.comparable_forced.to_string()),
        ("lemma3_forced", s.lemma3_forced.to_string()),
        ("degree_forced", s.degree_forced.to_string()),
        ("outputs", s.outputs.to_string()),
        ("largest_order", s.largest_order.to_string()),
        ("elapsed_ms", s.elapsed.as_millis().to_string()),
    ]
}

fn set_stat(s: &mut SearchStats, kv: &str) -> Option<()> {
    let (k, v) = kv.split_once('=')?;
    let n: u64 = v.parse().ok()?;
    match k {
        "nodes_expanded" => s.nodes_expanded = n,
        "candidates_tested" => s.candidates_tested = n,
        "children" => s.children = n,
        "iso_rejections" => s.iso_rejections = n,
        "family_cuts" => s.family_cuts = n,
        "colour_prunes" => s.colour_prunes = n,
        "comparable_forced" => s.comparable_forced = n,
        "lemma3_forced" => s.lemma3_forced = n,
        "degree_forced" => s.degree_forced = n,
        "outputs" => s.outputs = n,
        "largest_order" => s.largest_order = n as usize,
        "elapsed_ms" => s.elapsed = Duration::from_millis(n),
        _ => return None,
    }
    Some(())
}
