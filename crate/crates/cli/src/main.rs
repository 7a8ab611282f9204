//! `vcrit`: generate, audit and certify vertex-critical graphs.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
//! budget exceeded.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};

use vcrit_core::certify::{certify_4colourable, verify_certificate_text, Catalog, Certificate};
use vcrit_core::detect::{induced_c5s, PatternFamily};
use vcrit_core::generate::{generate, oracle_enumerate, resume, Checkpoint, GenerationTask, Rules, Stop};
use vcrit_core::structure::{reduce_homogeneous_c5_steps, ClaimAuditor};
use vcrit_core::{canonical_form, decode_graph6, Error, Graph, NamedGraph};

#[derive(Parser, Debug, PartialEq)]
#[command(name = "vcrit", version, about = "Vertex-critical graph generation and certification")]
struct Cli {
    /// Print extra diagnostics to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, PartialEq)]
enum Command {
    /// Exhaustively generate k-vertex-critical family-free graphs containing a seed.
    Generate(GenerateArgs),
    /// Enumerate the same graphs by brute force (small orders only).
    Oracle(OracleArgs),
    /// Certify 4-colourability of a (P6, bull)-free graph read from stdin.
    Certify {
        #[arg(long)]
        catalog: PathBuf,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate against the graph6 read from stdin.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Replace homogeneous five-cycles by triangles until none remain.
    Reduce,
    /// Decompose around induced five-cycles and evaluate the structural claims.
    Audit {
        /// Comma-separated cycle, in cycle order; default: every induced C5.
        #[arg(long)]
        cycle: Option<String>,
    },
    /// Catalog management.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand, Debug, PartialEq)]
enum CatalogCommand {
    /// Re-verify every member of a catalog file.
    Check { path: PathBuf },
    /// Turn graph6 lines on stdin into a catalog named `<prefix>1`, `<prefix>2`, ...
    Make {
        #[arg(long, default_value = "g")]
        prefix: String,
    },
}

#[derive(Args, Debug, PartialEq, Clone)]
struct FamilyArgs {
    /// Comma-separated pattern names, or `none`.
    #[arg(long, default_value = "none")]
    family: String,
    /// File of `name<TAB>graph6` patterns, added to `--family`.
    #[arg(long)]
    family_file: Option<PathBuf>,
}

impl FamilyArgs {
    fn load(&self) -> anyhow::Result<PatternFamily> {
        let mut pats = PatternFamily::from_names(&self.family)?.patterns().to_vec();
        if let Some(p) = &self.family_file {
            let f = File::open(p).with_context(|| format!("opening {}", p.display()))?;
            pats.extend(PatternFamily::read_from(BufReader::new(f))?.patterns().iter().cloned());
        }
        Ok(PatternFamily::new(pats))
    }
}

#[derive(Args, Debug, PartialEq, Clone)]
struct GenerateArgs {
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    family: FamilyArgs,
    /// Seed graph, by name (`co_c7`, `f2`, `k1`, ...) or graph6.
    #[arg(long, default_value = "k1")]
    seed: String,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Comma-separated rule tags replacing the default set.
    #[arg(long)]
    rules: Option<String>,
    /// Rule tags to switch on on top of the chosen set.
    #[arg(long = "enable")]
    enable: Vec<String>,
    /// Rule tags to switch off.
    #[arg(long = "disable")]
    disable: Vec<String>,
    /// Write a checkpoint after every level.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Continue from a checkpoint.
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Write graph6 lines here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

impl GenerateArgs {
    /// Command-line arguments that parse back to `self`.
    fn to_args(&self) -> Vec<String> {
        let mut a = vec!["generate".to_string(), "--k".into(), self.k.to_string()];
        a.extend(["--family".into(), self.family.family.clone()]);
        if let Some(p) = &self.family.family_file {
            a.extend(["--family-file".into(), p.display().to_string()]);
        }
        a.extend(["--seed".into(), self.seed.clone()]);
        if let Some(m) = self.max_order {
            a.extend(["--max-order".into(), m.to_string()]);
        }
        a.extend(["--workers".into(), self.workers.to_string()]);
        if let Some(r) = &self.rules {
            a.extend(["--rules".into(), r.clone()]);
        }
        for e in &self.enable {
            a.extend(["--enable".into(), e.clone()]);
        }
        for d in &self.disable {
            a.extend(["--disable".into(), d.clone()]);
        }
        for (flag, p) in [("--checkpoint", &self.checkpoint), ("--resume", &self.resume), ("--output", &self.output)] {
            if let Some(p) = p {
                a.extend([flag.into(), p.display().to_string()]);
            }
        }
        a
    }

    fn task(&self) -> anyhow::Result<GenerationTask> {
        let mut rules = match &self.rules {
            Some(r) => r.parse::<Rules>()?,
            None => Rules::default(),
        };
        for t in &self.enable {
            rules.set(t, true)?;
        }
        for t in &self.disable {
            rules.set(t, false)?;
        }
        let mut task = GenerationTask::new(self.k, self.family.load()?, parse_seed(&self.seed)?);
        task.max_order = self.max_order;
        task.rules = rules;
        task.workers = self.workers;
        task.checkpoint = self.checkpoint.clone();
        task.budget.max_nodes = env_budget("VCRIT_MAX_NODES")?;
        task.budget.max_seconds = env_budget("VCRIT_MAX_SECONDS")?;
        Ok(task)
    }
}

#[derive(Args, Debug, PartialEq)]
struct OracleArgs {
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    max_order: usize,
}

fn env_budget<T: std::str::FromStr>(var: &str) -> anyhow::Result<Option<T>> {
    match std::env::var(var) {
        Ok(v) if !v.trim().is_empty() => v.trim().parse().map(Some).map_err(|_| anyhow!(Usage(format!("bad {var}: `{v}`")))),
        _ => Ok(None),
    }
}

fn parse_seed(s: &str) -> anyhow::Result<Graph> {
    if let Ok(n) = s.parse::<NamedGraph>() {
        return Ok(n.build()?);
    }
    decode_graph6(s).map_err(|e| anyhow!(Usage(format!("seed `{s}` is neither a known name nor graph6 ({e})"))))
}

/// An error caused by bad input rather than a failed check.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// A check ran and failed.
#[derive(Debug)]
struct Failed(String);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

fn read_graph_stdin() -> anyhow::Result<Graph> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    let line = s.lines().map(str::trim).find(|l| !l.is_empty()).ok_or_else(|| anyhow!(Usage("expected a graph6 line on stdin".into())))?;
    decode_graph6(line).map_err(|e| anyhow!(Usage(e.to_string())))
}

fn sink(path: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

fn run_generate(args: &GenerateArgs, verbose: bool) -> anyhow::Result<ExitCode> {
    let task = args.task()?;
    if verbose {
        eprintln!("config: {}", args.to_args().join(" "));
        eprintln!("rules={}", task.rules);
    }
    let run = match &args.resume {
        Some(p) => resume(&task, &Checkpoint::read(p)?)?,
        None => generate(&task)?,
    };
    let mut out = sink(&args.output)?;
    for f in &run.forms {
        writeln!(out, "{f}")?;
    }
    out.flush()?;
    eprint!("{}", run.stats.to_lines());
    let stop = match run.stop {
        Stop::Exhausted => "exhausted",
        Stop::OrderCap => "order_cap",
        Stop::Budget => "budget",
    };
    eprintln!("stop={stop}");
    eprintln!("complete={}", run.is_exhaustive());
    Ok(if run.stop == Stop::Budget { ExitCode::from(3) } else { ExitCode::SUCCESS })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Generate(a) => run_generate(&a, cli.verbose),
        Command::Oracle(a) => {
            let fam = a.family.load()?;
            let mut forms: Vec<_> = oracle_enumerate(a.k, &fam, a.max_order)?.iter().map(canonical_form).collect();
            forms.sort();
            let mut out = io::stdout().lock();
            for f in forms {
                writeln!(out, "{f}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { catalog, output } => {
            let cat = Catalog::read_from(BufReader::new(File::open(&catalog).with_context(|| format!("opening {}", catalog.display()))?))?;
            let g = read_graph_stdin()?;
            let cert = match certify_4colourable(&g, &cat) {
                Ok(c) => c,
                Err(e @ Error::IncompleteCatalog) => return Err(anyhow!(Failed(e.to_string()))),
                Err(e @ Error::NotFamilyFree(_)) => return Err(anyhow!(Usage(e.to_string()))),
                Err(e) => return Err(e.into()),
            };
            let mut out = sink(&output)?;
            write!(out, "{}", cert.to_text(&g))?;
            eprintln!("verdict={}", cert.verdict());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { certificate } => {
            let text = std::fs::read_to_string(&certificate).with_context(|| format!("reading {}", certificate.display()))?;
            let g = read_graph_stdin()?;
            if verify_certificate_text(&g, &text) {
                let verdict = Certificate::parse(&text).map(|(_, c)| c.verdict()).unwrap_or("?");
                println!("ok {verdict}");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("fail");
                Ok(ExitCode::from(1))
            }
        }
        Command::Reduce => {
            let g = read_graph_stdin()?;
            let (h, steps) = reduce_homogeneous_c5_steps(&g);
            for (i, s) in steps.iter().enumerate() {
                eprintln!("step {}: replaced {:?} -> {}", i + 1, s.replaced.to_vec(), s.result.to_graph6());
            }
            println!("{}", h.to_graph6());
            println!("steps={}", steps.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit { cycle } => {
            let g = read_graph_stdin()?;
            let cycles = match cycle {
                Some(c) => {
                    let v: Vec<usize> = c
                        .split(',')
                        .map(|x| x.trim().parse())
                        .collect::<Result<_, _>>()
                        .map_err(|_| anyhow!(Usage(format!("bad cycle `{c}`"))))?;
                    let q: [usize; 5] = v.try_into().map_err(|_| anyhow!(Usage("a cycle has five vertices".into())))?;
                    vec![q]
                }
                None => induced_c5s(&g),
            };
            if cycles.is_empty() {
                println!("no induced C5");
                return Ok(ExitCode::SUCCESS);
            }
            let aud = ClaimAuditor::new(&g);
            let mut failed = false;
            for q in cycles {
                let r = aud.audit(q).map_err(|e| anyhow!(Usage(e.to_string())))?;
                println!("cycle {}", q.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
                print!("{}", r.to_lines());
                failed |= !r.all_unconditional_hold();
            }
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Catalog(CatalogCommand::Check { path }) => {
            let f = File::open(&path).with_context(|| format!("opening {}", path.display()))?;
            match Catalog::read_from(BufReader::new(f)) {
                Ok(c) => {
                    c.check()?;
                    println!("ok {} members", c.len());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e @ (Error::InvalidCatalogEntry { .. } | Error::Parse { .. })) => {
                    println!("fail: {e}");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Catalog(CatalogCommand::Make { prefix }) => {
            let mut graphs = Vec::new();
            for line in io::stdin().lock().lines() {
                let line = line?;
                if !line.trim().is_empty() {
                    graphs.push(decode_graph6(line.trim()).map_err(|e| anyhow!(Usage(e.to_string())))?);
                }
            }
            match Catalog::from_graphs(&prefix, &graphs) {
                Ok(c) => {
                    print!("{}", c.to_text());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => bail!(Failed(e.to_string())),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                return ExitCode::from(2);
            }
            if e.downcast_ref::<Failed>().is_some() {
                return ExitCode::from(1);
            }
            match e.downcast_ref::<Error>() {
                Some(Error::BudgetExceeded(_)) => ExitCode::from(3),
                Some(
                    Error::UnknownName(_)
                    | Error::Graph6(_)
                    | Error::InvalidParameter(_)
                    | Error::SeedNotFamilyFree(_)
                    | Error::Parse { .. }
                    | Error::OrderTooLarge { .. },
                ) => ExitCode::from(2),
                Some(Error::Unsound(_)) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generate_config_round_trips() {
        let argv = [
            "vcrit", "generate", "--k", "5", "--family", "p6,bull", "--seed", "co_c7", "--max-order", "11", "--workers", "2",
            "--enable", "degree-forcing", "--disable", "smallest-branch", "--output", "out.g6",
        ];
        let cli = Cli::parse_from(argv);
        let Command::Generate(a) = &cli.command else { panic!("expected generate") };
        let mut again = vec!["vcrit".to_string()];
        again.extend(a.to_args());
        assert_eq!(Cli::parse_from(again), cli);
        let t = a.task().unwrap();
        assert!(t.rules.degree_forcing && !t.rules.smallest_branch);
        assert_eq!(t.seed.order(), 7);
    }

    #[test]
    fn seeds_accept_names_and_graph6() {
        assert_eq!(parse_seed("c5").unwrap(), parse_seed("Dhc").unwrap());
        assert!(parse_seed("nonsense!").is_err());
    }
}
