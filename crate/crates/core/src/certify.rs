//! Certified 4-colourability of (P6, bull)-free graphs.
//!
//! A positive answer comes with a proper 4-colouring. A negative one comes
//! with an induced copy of a 5-vertex-critical graph from a [`Catalog`].
//!
//! Certificate text:
//!
//! ```text
//! vcrit-certificate 1
//! graph Dhc
//! verdict four_colourable
//! colour 0:0
//! ...
//! digest <sha256 of all previous lines>
//! ```
//!
//! or, for a negative verdict, `witness <name>`, `member <graph6>` and one
//! `map p->h` line per vertex of the member in place of the colour lines.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::io::BufRead;

use sha2::{Digest, Sha256};

use crate::canon::{canonical_form, CanonicalForm};
use crate::colour::{k_colourable, Colouring};
use crate::critical::is_vertex_critical;
use crate::detect::{Embedding, Pattern, PatternFamily};
use crate::error::{Error, Result};
use crate::graph::{decode_graph6, Graph};

const MAGIC: &str = "vcrit-certificate 1";

/// The forbidden family the certifier accepts input from.
pub fn certified_family() -> PatternFamily {
    PatternFamily::from_names("p6,bull").expect("fixed names")
}

/// A list of 5-vertex-critical (P6, bull)-free graphs, one per isomorphism
/// class, kept sorted by order and then name.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    members: Vec<Pattern>,
    index: HashMap<CanonicalForm, String>,
}

impl Catalog {
    pub fn new() -> Self {
        Catalog::default()
    }

    /// Adds a member after checking it is 5-vertex-critical, (P6, bull)-free
    /// and new up to isomorphism.
    pub fn insert(&mut self, name: &str, g: Graph) -> Result<()> {
        let bad = |reason: &str| Error::InvalidCatalogEntry { name: name.to_string(), reason: reason.to_string() };
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(bad("names must be nonempty and contain no whitespace"));
        }
        if self.members.iter().any(|p| p.name() == name) {
            return Err(bad("duplicate name"));
        }
        if let Some((p, _)) = certified_family().find_any(&g) {
            return Err(bad(&format!("contains an induced {}", p.name())));
        }
        if !is_vertex_critical(&g, 5) {
            return Err(bad("not 5-vertex-critical"));
        }
        let cf = canonical_form(&g);
        if let Some(other) = self.index.get(&cf) {
            return Err(bad(&format!("isomorphic to `{other}`")));
        }
        let pos = self
            .members
            .partition_point(|p| (p.graph().order(), p.name()) < (g.order(), name));
        self.members.insert(pos, Pattern::new(name, g));
        self.index.insert(cf, name.to_string());
        Ok(())
    }

    /// Builds a catalog from graphs named `prefix1`, `prefix2`, ...
    pub fn from_graphs(prefix: &str, graphs: &[Graph]) -> Result<Self> {
        let mut c = Catalog::new();
        for (i, g) in graphs.iter().enumerate() {
            c.insert(&format!("{prefix}{}", i + 1), g.clone())?;
        }
        Ok(c)
    }

    /// Reads `name<TAB>graph6` lines; blank lines and `#` comments are skipped.
    pub fn read_from<R: BufRead>(r: R) -> Result<Self> {
        let mut c = Catalog::new();
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: i + 1, msg };
            let (name, g6) = line.split_once('\t').ok_or_else(|| perr("expected name<TAB>graph6".into()))?;
            let g = decode_graph6(g6.trim()).map_err(|e| perr(e.to_string()))?;
            c.insert(name.trim(), g)?;
        }
        Ok(c)
    }

    pub fn to_text(&self) -> String {
        self.members.iter().map(|p| format!("{}\t{}\n", p.name(), canonical_form(p.graph()))).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Pattern] {
        &self.members
    }

    pub fn get(&self, name: &str) -> Option<&Pattern> {
        self.members.iter().find(|p| p.name() == name)
    }

    pub fn contains_isomorph(&self, g: &Graph) -> bool {
        self.index.contains_key(&canonical_form(g))
    }

    /// Re-checks every member from scratch; returns the first problem found.
    pub fn check(&self) -> Result<()> {
        let mut fresh = Catalog::new();
        for p in &self.members {
            fresh.insert(p.name(), p.graph().clone())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    FourColourable(Colouring),
    NotFourColourable { witness: String, member: Box<Graph>, embedding: Embedding },
}

impl Certificate {
    pub fn verdict(&self) -> &'static str {
        match self {
            Certificate::FourColourable(_) => "four_colourable",
            Certificate::NotFourColourable { .. } => "not_four_colourable",
        }
    }

    pub fn is_four_colourable(&self) -> bool {
        matches!(self, Certificate::FourColourable(_))
    }

    /// Serializes the certificate for `g`.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{MAGIC}");
        let _ = writeln!(s, "graph {}", g.to_graph6());
        let _ = writeln!(s, "verdict {}", self.verdict());
        match self {
            Certificate::FourColourable(c) => {
                for (v, col) in c.colours.iter().enumerate() {
                    let _ = writeln!(s, "colour {v}:{col}");
                }
            }
            Certificate::NotFourColourable { witness, member, embedding } => {
                let _ = writeln!(s, "witness {witness}");
                let _ = writeln!(s, "member {}", member.to_graph6());
                for (p, h) in embedding.map.iter().enumerate() {
                    let _ = writeln!(s, "map {p}->{h}");
                }
            }
        }
        let digest = hex::encode(Sha256::digest(s.as_bytes()));
        let _ = writeln!(s, "digest {digest}");
        s
    }

    /// Parses certificate text, returning the graph it was issued for.
    pub fn parse(text: &str) -> Result<(Graph, Certificate)> {
        let perr = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let cut = text.rfind("digest ").ok_or_else(|| perr(0, "missing digest"))?;
        let (body, tail) = text.split_at(cut);
        if !tail.ends_with('\n') || tail.trim_start_matches("digest ").trim_end_matches('\n') != hex::encode(Sha256::digest(body.as_bytes())) {
            return Err(perr(0, "digest mismatch"));
        }
        let mut lines = body.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut field = |tag: &str| -> Result<(usize, String)> {
            let (ln, l) = lines.next().ok_or_else(|| perr(0, "truncated certificate"))?;
            if tag.is_empty() {
                return Ok((ln, l.to_string()));
            }
            l.strip_prefix(tag).map(|r| (ln, r.to_string())).ok_or_else(|| perr(ln, &format!("expected `{tag}`")))
        };
        if field("")?.1 != MAGIC {
            return Err(perr(1, "not a certificate (bad header)"));
        }
        let (ln, g6) = field("graph ")?;
        let g = decode_graph6(&g6).map_err(|e| perr(ln, &e.to_string()))?;
        let (ln, verdict) = field("verdict ")?;
        let rest: Vec<(usize, &str)> = lines.collect();
        let cert = match verdict.as_str() {
            "four_colourable" => {
                let mut colours = Vec::new();
                for (ln, l) in rest {
                    let (v, c) = l
                        .strip_prefix("colour ")
                        .and_then(|r| r.split_once(':'))
                        .ok_or_else(|| perr(ln, "expected `colour v:c`"))?;
                    let v: usize = v.parse().map_err(|_| perr(ln, "bad vertex"))?;
                    let c: usize = c.parse().map_err(|_| perr(ln, "bad colour"))?;
                    if v != colours.len() {
                        return Err(perr(ln, "colour lines out of order"));
                    }
                    colours.push(c);
                }
                Certificate::FourColourable(Colouring { colours })
            }
            "not_four_colourable" => {
                let mut it = rest.into_iter();
                let (ln, l) = it.next().ok_or_else(|| perr(ln, "missing witness"))?;
                let witness = l.strip_prefix("witness ").ok_or_else(|| perr(ln, "expected `witness`"))?.to_string();
                let (ln, l) = it.next().ok_or_else(|| perr(ln, "missing member"))?;
                let member = decode_graph6(l.strip_prefix("member ").ok_or_else(|| perr(ln, "expected `member`"))?)
                    .map_err(|e| perr(ln, &e.to_string()))?;
                let mut map = Vec::new();
                for (ln, l) in it {
                    let (p, h) = l
                        .strip_prefix("map ")
                        .and_then(|r| r.split_once("->"))
                        .ok_or_else(|| perr(ln, "expected `map p->h`"))?;
                    let p: usize = p.parse().map_err(|_| perr(ln, "bad pattern vertex"))?;
                    let h: usize = h.parse().map_err(|_| perr(ln, "bad host vertex"))?;
                    if p != map.len() {
                        return Err(perr(ln, "map lines out of order"));
                    }
                    map.push(h);
                }
                Certificate::NotFourColourable { witness, member: Box::new(member), embedding: Embedding { map } }
            }
            _ => return Err(perr(ln, "unknown verdict")),
        };
        Ok((g, cert))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::FourColourable(c) => write!(f, "four_colourable ({} colours)", c.num_colours()),
            Certificate::NotFourColourable { witness, .. } => write!(f, "not_four_colourable (contains {witness})"),
        }
    }
}

/// Decides 4-colourability of a (P6, bull)-free graph with a certificate.
pub fn certify_4colourable(g: &Graph, cat: &Catalog) -> Result<Certificate> {
    if cat.is_empty() {
        return Err(Error::InvalidParameter("catalog is empty".into()));
    }
    if let Some((p, _)) = certified_family().find_any(g) {
        return Err(Error::NotFamilyFree(p.name().to_string()));
    }
    if let Some(c) = k_colourable(g, 4) {
        return Ok(Certificate::FourColourable(c));
    }
    for p in cat.members() {
        if let Some(embedding) = p.find_in(g) {
            return Ok(Certificate::NotFourColourable {
                witness: p.name().to_string(),
                member: Box::new(p.graph().clone()),
                embedding,
            });
        }
    }
    Err(Error::IncompleteCatalog)
}

/// Whether `cert` proves its verdict for `g`, using only definitional checks.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    match cert {
        Certificate::FourColourable(c) => {
            c.colours.len() == g.order() && c.colours.iter().all(|&x| x < 4) && c.is_proper(g)
        }
        Certificate::NotFourColourable { member, embedding, .. } => {
            embedding.verify(member, g) && is_vertex_critical(member, 5)
        }
    }
}

/// Parses and verifies certificate text against `g`.
pub fn verify_certificate_text(g: &Graph, text: &str) -> bool {
    match Certificate::parse(text) {
        Ok((h, cert)) => &h == g && verify_certificate(g, &cert),
        Err(_) => false,
    }
}
