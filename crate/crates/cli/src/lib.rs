//! The `pebbling` command line.
//!
//! Exit codes: 0 success (for `solve`, solvable), 1 insufficient, 2 usage
//! error, 3 time budget exceeded (partial output printed), 4 empty
//! reconstruction, 5 a verification claim failed.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use pebbling_core::graph::{canonical_form, enumerate_graphs, parse_graph_text, to_dot, to_graph_text, Family, Graph};
use pebbling_core::parameters::{Analysis, Options, ParameterError, ParameterReport};
use pebbling_core::pebble::RootedDistribution;
use pebbling_core::reconstruct::{check_constraints, reconstruct, PaperGraph};
use pebbling_core::solver::Solver;
use pebbling_core::verify::{self, Claim};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INSUFFICIENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_EMPTY: i32 = 4;
pub const EXIT_FAILED: i32 = 5;

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "PEBBLING_CACHE_DIR";

/// Bumped whenever cached results would change meaning.
const CACHE_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "pebbling", version, about = "Exact graph pebbling computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a rooted distribution can reach its root.
    Solve(SolveArgs),
    /// Compute every pebbling parameter of a graph.
    Params(ParamsArgs),
    /// Rebuild one of the example graphs G1..G4 from its properties.
    Reconstruct(ReconstructArgs),
    /// Check the published values and lemmas.
    VerifyPaper(VerifyArgs),
    /// Parameters of every connected graph on n vertices.
    Sweep(SweepArgs),
}

#[derive(Args, Debug, Clone)]
struct GraphArgs {
    /// Standard family, e.g. cycle:7, complete_bipartite:2,3, fan:5.
    #[arg(long, conflicts_with = "graph")]
    family: Option<String>,
    /// Graph file: a line "n m" then m lines "u v".
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    workers: u32,
    /// Cache directory (default: $PEBBLING_CACHE_DIR, else no cache).
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Time budget in seconds.
    #[arg(long, value_parser = parse_budget)]
    budget: Option<f64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    #[value(name = "json-like", alias = "json", alias = "structured")]
    JsonLike,
    Dot,
    Csv,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Distribution "c0,c1,..." or rooted "c0,c1,...@r".
    distribution: String,
    #[arg(long)]
    root: Option<usize>,
    /// Pebbles required on the root.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    target: u32,
    /// Only allow steps toward the root.
    #[arg(long)]
    greedy: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct ParamsArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct ReconstructArgs {
    /// G1, G2, G3 or G4.
    name: String,
    /// Directory to write each graph and its constraint report to.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Extend the corpus checks from 6 to 7 vertices.
    #[arg(long)]
    slow: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated clauses key=value or key!=value; a value may name
    /// another column, e.g. "thrifty=true,c_r!=two_pow_d".
    #[arg(long)]
    filter: Option<String>,
    /// Allow n > 7.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    common: Common,
}

fn parse_budget(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("budget must be a positive number of seconds, got {s:?}")),
    }
}

impl Common {
    fn options(&self) -> Options {
        let o = Options::default().with_workers(self.workers as usize);
        match self.budget {
            Some(b) => o.with_budget(Duration::from_secs_f64(b)),
            None => o,
        }
    }

    fn cache_dir(&self) -> Option<PathBuf> {
        self.cache.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
    }
}

/// A failure that maps to a specific exit code.
#[derive(Debug)]
struct Exit(i32, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Exit(EXIT_USAGE, msg.into()).into()
}

fn load_graph(args: &GraphArgs) -> Result<(Graph, String)> {
    match (&args.family, &args.graph) {
        (Some(f), None) => {
            let fam = Family::parse(f).map_err(|e| usage(e.to_string()))?;
            let g = pebbling_core::make_family(fam).map_err(|e| usage(e.to_string()))?;
            Ok((g, f.clone()))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let g = parse_graph_text(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok((g, path.display().to_string()))
        }
        _ => Err(usage("give exactly one of --family or --graph")),
    }
}

/// Pretty, sorted-key JSON with a trailing newline.
fn emit_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Runs the command line on `args` (including the program name), writing
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a, out),
        Command::Params(a) => cmd_params(a, out),
        Command::Reconstruct(a) => cmd_reconstruct(a, out),
        Command::VerifyPaper(a) => cmd_verify_paper(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let code = e.downcast_ref::<Exit>().map_or(EXIT_USAGE, |x| x.0);
            let _ = writeln!(err, "error: {e:#}");
            code
        }
    }
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let (g, _) = load_graph(&a.graph)?;
    let rd = parse_rooted(&a.distribution, a.root, g.n())?;
    let mut solver = Solver::new(&g);
    let cert = solver.solve(&rd, a.target, a.greedy).map_err(|e| usage(e.to_string()))?;
    let class = solver.classify(&rd)?;
    let w = solver.weight(&rd);
    match a.common.format {
        Format::JsonLike => {
            let v = json!({
                "distribution": rd.to_string(),
                "target": a.target,
                "greedy_only": a.greedy,
                "solvable": cert.is_some(),
                "classification": class,
                "weight": w.to_string(),
                "certificate": cert.as_ref().map(|c| c.steps.iter().map(|(u, v)| format!("({u}→{v})")).collect::<Vec<_>>()),
            });
            out.write_all(emit_json(&v).as_bytes())?;
        }
        Format::Csv => {
            writeln!(out, "distribution,target,greedy_only,solvable,classification,weight,steps")?;
            writeln!(
                out,
                "\"{rd}\",{},{},{},{class},{w},{}",
                a.target,
                a.greedy,
                cert.is_some(),
                cert.as_ref().map_or(String::new(), |c| c.to_string())
            )?;
        }
        Format::Dot => out.write_all(to_dot(&g, None).as_bytes())?,
        Format::Human => {
            writeln!(out, "distribution    {rd}")?;
            writeln!(out, "solvable        {}", if cert.is_some() { "yes" } else { "no" })?;
            writeln!(out, "classification  {class}")?;
            writeln!(out, "weight          {w}")?;
            if let Some(c) = &cert {
                writeln!(out, "certificate     {} steps: {c}", c.steps.len())?;
            }
        }
    }
    Ok(if cert.is_some() { EXIT_OK } else { EXIT_INSUFFICIENT })
}

fn parse_rooted(s: &str, root: Option<usize>, n: usize) -> Result<RootedDistribution> {
    let rd: RootedDistribution = if s.contains('@') {
        let rd: RootedDistribution = s.parse().map_err(|e: pebbling_core::DistributionError| usage(e.to_string()))?;
        if root.is_some_and(|r| r != rd.root()) {
            return Err(usage("--root disagrees with the root given after '@'"));
        }
        rd
    } else {
        let r = root.ok_or_else(|| usage("no root: append @r to the distribution or pass --root"))?;
        let d: pebbling_core::Distribution =
            s.parse().map_err(|e: pebbling_core::DistributionError| usage(e.to_string()))?;
        RootedDistribution::new(d, r).map_err(|e| usage(e.to_string()))?
    };
    if rd.dist().len() != n {
        return Err(usage(format!("distribution has {} entries, graph has {n} vertices", rd.dist().len())));
    }
    if rd.root() >= n {
        return Err(usage(format!("root {} out of range", rd.root())));
    }
    Ok(rd)
}

fn cache_key(g: &Graph) -> String {
    hex::encode(Sha256::digest(to_graph_text(g).as_bytes()))
}

/// Cached report for `g`, if present and made for exactly this graph.
fn cache_load(dir: &Path, g: &Graph) -> Option<ParameterReport> {
    let text = fs::read_to_string(dir.join(format!("params-{}.json", cache_key(g)))).ok()?;
    let v: Value = serde_json::from_str(&text).ok()?;
    if v["version"] != json!(CACHE_VERSION) || v["graph"] != json!(to_graph_text(g)) {
        return None;
    }
    serde_json::from_value(v["report"].clone()).ok()
}

fn cache_store(dir: &Path, g: &Graph, r: &ParameterReport) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating cache {}", dir.display()))?;
    let v = json!({ "version": CACHE_VERSION, "graph": to_graph_text(g), "report": r });
    let path = dir.join(format!("params-{}.json", cache_key(g)));
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, emit_json(&v))?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

/// Full report, through the cache when one is configured. On a budget
/// overrun returns the values computed so far.
fn report_for(g: &Graph, common: &Common, opts: Options) -> Result<Result<ParameterReport, BTreeMap<&'static str, String>>> {
    let dir = common.cache_dir();
    if let Some(r) = dir.as_deref().and_then(|d| cache_load(d, g)) {
        return Ok(Ok(r));
    }
    let mut a = Analysis::with_options(g, opts);
    match a.full_report() {
        Ok(r) => {
            if let Some(d) = &dir {
                cache_store(d, g, &r)?;
            }
            Ok(Ok(r))
        }
        Err(ParameterError::BudgetExceeded) => Ok(Err(a.computed_so_far())),
        Err(e) => Err(e.into()),
    }
}

/// Structured form of a report; keys are sorted.
pub fn report_json(r: &ParameterReport) -> Value {
    serde_json::to_value(r).expect("serializable")
}

const REPORT_COLUMNS: [&str; 13] = [
    "n", "diameter", "p", "c_g", "c_r", "two_pow_d", "c_u", "c_ru", "o", "greedy", "thrifty", "weight", "max_critical_weight",
];

fn report_fields(r: &ParameterReport) -> BTreeMap<&'static str, String> {
    let vals = [
        r.n.to_string(),
        r.diameter.to_string(),
        r.p.to_string(),
        r.c_g.to_string(),
        r.c_r.to_string(),
        r.two_pow_d.to_string(),
        r.c_u.to_string(),
        r.c_ru.to_string(),
        r.o.to_string(),
        r.is_greedy.to_string(),
        r.is_thrifty.to_string(),
        r.graph_weight.to_string(),
        r.max_critical_weight.to_string(),
    ];
    REPORT_COLUMNS.iter().copied().zip(vals).collect()
}

fn cmd_params(a: ParamsArgs, out: &mut dyn Write) -> Result<i32> {
    let (g, name) = load_graph(&a.graph)?;
    let opts = a.common.options();
    let report = match report_for(&g, &a.common, opts)? {
        Ok(r) => r,
        Err(partial) => {
            let mut m: BTreeMap<&str, Value> = partial.into_iter().map(|(k, v)| (k, Value::String(v))).collect();
            m.insert("partial", Value::Bool(true));
            out.write_all(emit_json(&json!(m)).as_bytes())?;
            return Ok(EXIT_BUDGET);
        }
    };
    match a.common.format {
        Format::JsonLike => out.write_all(emit_json(&report_json(&report)).as_bytes())?,
        Format::Csv => {
            let f = report_fields(&report);
            writeln!(out, "{}", REPORT_COLUMNS.join(","))?;
            writeln!(out, "{}", REPORT_COLUMNS.iter().map(|c| f[c].clone()).collect::<Vec<_>>().join(","))?;
        }
        Format::Dot => out.write_all(to_dot(&g, None).as_bytes())?,
        Format::Human => {
            writeln!(out, "graph {name}: {} vertices, {} edges", g.n(), g.edge_count())?;
            let row = report.table_row();
            writeln!(out, "(p, c_g, c_r, 2^d, n, c_u, o) = ({})", row.map(|x| x.to_string()).join(", "))?;
            writeln!(out, "diameter        {}", report.diameter)?;
            writeln!(out, "greedy          {}", report.is_greedy)?;
            writeln!(out, "thrifty         {}", report.is_thrifty)?;
            writeln!(out, "weight          {}", report.graph_weight)?;
            writeln!(out, "max crit weight {}", report.max_critical_weight)?;
            writeln!(out, "ceilings        {}", report.ceilings.len())?;
            for c in &report.ceilings {
                writeln!(out, "  {c}")?;
            }
            writeln!(out, "witnesses")?;
            for (k, w) in &report.witnesses {
                let s = serde_json::to_value(w).expect("serializable");
                writeln!(out, "  {k:<22} {}", s.as_str().unwrap_or_default())?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_reconstruct(a: ReconstructArgs, out: &mut dyn Write) -> Result<i32> {
    let which: PaperGraph = a.name.parse().map_err(usage)?;
    let opts = a.common.options();
    let cache_file = a.common.cache_dir().map(|d| d.join(format!("reconstruct-{which}.json")));
    let cached: Option<Vec<Graph>> = cache_file.as_ref().and_then(|p| {
        let v: Value = serde_json::from_str(&fs::read_to_string(p).ok()?).ok()?;
        if v["version"] != json!(CACHE_VERSION) {
            return None;
        }
        v["graphs"].as_array()?.iter().map(|t| parse_graph_text(t.as_str()?).ok()).collect()
    });
    let graphs = match cached {
        Some(g) => g,
        None => match reconstruct(which, opts) {
            Ok(g) => {
                if let Some(p) = &cache_file {
                    fs::create_dir_all(p.parent().expect("file in a directory"))?;
                    let texts: Vec<String> = g.iter().map(to_graph_text).collect();
                    fs::write(p, emit_json(&json!({ "version": CACHE_VERSION, "graphs": texts })))?;
                }
                g
            }
            Err(ParameterError::BudgetExceeded) => {
                writeln!(out, "partial: budget exceeded before the search finished")?;
                return Ok(EXIT_BUDGET);
            }
            Err(e) => return Err(e.into()),
        },
    };
    let labels = which.labels();
    let mut entries = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let checks = check_constraints(which, g)?;
        if let Some(dir) = &a.out {
            fs::create_dir_all(dir)?;
            fs::write(dir.join(format!("{which}-{i}.txt")), to_graph_text(g))?;
            fs::write(dir.join(format!("{which}-{i}.constraints.json")), emit_json(&json!(checks)))?;
        }
        entries.push((g, checks));
    }
    match a.common.format {
        Format::JsonLike => {
            let v: Vec<Value> = entries
                .iter()
                .map(|(g, checks)| {
                    json!({
                        "graph": to_graph_text(g),
                        "canonical": canonical_form(g).to_hex(),
                        "labels": labels,
                        "constraints": checks,
                    })
                })
                .collect();
            out.write_all(emit_json(&json!({ "name": which.to_string(), "graphs": v })).as_bytes())?;
        }
        Format::Dot => {
            for (g, _) in &entries {
                out.write_all(to_dot(g, labels.as_deref()).as_bytes())?;
            }
        }
        Format::Csv => {
            writeln!(out, "graph,index,constraint,expected,actual,pass")?;
            for (i, (_, checks)) in entries.iter().enumerate() {
                for c in checks {
                    writeln!(out, "{which},{i},\"{}\",\"{}\",\"{}\",{}", c.name, c.expected, c.actual, c.pass)?;
                }
            }
        }
        Format::Human => {
            writeln!(out, "{which}: {} graph(s)", entries.len())?;
            for (i, (g, checks)) in entries.iter().enumerate() {
                let name = |v: usize| labels.as_ref().map_or(v.to_string(), |l| l[v].clone());
                let edges: Vec<String> = g.edges().iter().map(|&(u, v)| format!("{}-{}", name(u), name(v))).collect();
                writeln!(out, "[{i}] {} vertices, edges {}", g.n(), edges.join(" "))?;
                for c in checks {
                    let mark = if c.pass { "ok  " } else { "FAIL" };
                    writeln!(out, "    {mark} {:<32} expected {:<12} got {}", c.name, c.expected, c.actual)?;
                }
            }
        }
    }
    if entries.is_empty() {
        return Err(Exit(EXIT_EMPTY, format!("no graph satisfies the {which} constraints")).into());
    }
    if entries.iter().any(|(_, c)| c.iter().any(|x| !x.pass)) {
        return Ok(EXIT_FAILED);
    }
    Ok(EXIT_OK)
}

/// Every verification group, in order: `(criterion, title, claims)`.
pub fn verification_groups(opts: Options, corpus_n: usize) -> Result<Vec<(u32, &'static str, Vec<Claim>)>> {
    let det_graphs: Vec<Graph> = [Family::Cycle(7), Family::CompleteBipartite(2, 3), Family::Fan(5)]
        .into_iter()
        .map(|f| pebbling_core::make_family(f).expect("family"))
        .collect();
    Ok(vec![
        (1, "known parameter rows", verify::table_one(opts)?),
        (2, "stars", verify::stars(opts)?),
        (3, "fans", verify::fans(opts)?),
        (4, "C7", verify::cycle_seven(opts)?),
        (5, "reconstruction", verify::reconstructions(opts)?),
        (6, "lemma suite", verify::lemma_suite(corpus_n, 6, opts)?),
        (7, "oracle equivalence", verify::oracle_equivalence(5, 6)?),
        (8, "dominating-vertex cases", verify::cases_lemma(corpus_n)?),
        (9, "determinism", verify::determinism(&det_graphs)?),
    ])
}

fn cmd_verify_paper(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let opts = a.common.options();
    let groups = match verification_groups(opts, if a.slow { 7 } else { 6 }) {
        Ok(g) => g,
        Err(e) if matches!(e.downcast_ref::<ParameterError>(), Some(ParameterError::BudgetExceeded)) => {
            writeln!(out, "partial: budget exceeded")?;
            return Ok(EXIT_BUDGET);
        }
        Err(e) => return Err(e),
    };
    let mut failed = 0;
    let mut total = 0;
    let mut json_groups = Vec::new();
    for (num, title, claims) in &groups {
        if a.common.format == Format::Human {
            writeln!(out, "== {num}. {title}")?;
        }
        for c in claims {
            total += 1;
            if !c.pass {
                failed += 1;
            }
            if a.common.format == Format::Human {
                let mark = if c.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{mark} {}: expected {}, computed {}", c.name, c.expected, c.actual)?;
            }
        }
        json_groups.push(json!({ "criterion": num, "title": title, "claims": claims }));
    }
    match a.common.format {
        Format::Human => writeln!(out, "{} of {total} claims passed", total - failed)?,
        _ => out.write_all(emit_json(&json!({ "groups": json_groups, "passed": total - failed, "total": total })).as_bytes())?,
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}

/// One clause of a sweep filter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub key: String,
    pub negated: bool,
    pub value: String,
}

pub fn parse_filter(s: &str) -> Result<Vec<Clause>> {
    s.split(',')
        .map(str::trim)
        .filter(|c| !c.is_empty())
        .map(|c| {
            let (key, negated, value) = if let Some((k, v)) = c.split_once("!=") {
                (k, true, v)
            } else if let Some((k, v)) = c.split_once('=') {
                (k, false, v)
            } else {
                bail!("filter clause {c:?} is not key=value or key!=value");
            };
            let key = key.trim().to_string();
            if !REPORT_COLUMNS.contains(&key.as_str()) {
                bail!("unknown filter key {key:?}; known keys: {}", REPORT_COLUMNS.join(", "));
            }
            Ok(Clause { key, negated, value: value.trim().to_string() })
        })
        .collect()
}

fn matches(fields: &BTreeMap<&'static str, String>, clauses: &[Clause]) -> bool {
    clauses.iter().all(|c| {
        let rhs = fields.get(c.value.as_str()).unwrap_or(&c.value);
        (fields[c.key.as_str()] == *rhs) != c.negated
    })
}

fn cmd_sweep(a: SweepArgs, out: &mut dyn Write) -> Result<i32> {
    if a.n == 0 {
        return Err(usage("n must be at least 1"));
    }
    if a.n > 7 && !a.force {
        return Err(usage("sweeps above 7 vertices need --force"));
    }
    let clauses = match &a.filter {
        Some(f) => parse_filter(f).map_err(|e| usage(e.to_string()))?,
        None => Vec::new(),
    };
    let opts = a.common.options();
    let mut rows = Vec::new();
    let mut partial = false;
    for g in enumerate_graphs(a.n, |_| true) {
        match report_for(&g, &a.common, opts)? {
            Ok(r) => {
                let f = report_fields(&r);
                if matches(&f, &clauses) {
                    rows.push((g, f));
                }
            }
            Err(_) => {
                partial = true;
                break;
            }
        }
    }
    match a.common.format {
        Format::JsonLike => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(g, f)| {
                    let mut m: BTreeMap<&str, Value> = f.iter().map(|(k, v)| (*k, json!(v))).collect();
                    m.insert("canonical", json!(canonical_form(g).to_hex()));
                    m.insert("edges", json!(edge_list(g)));
                    json!(m)
                })
                .collect();
            out.write_all(emit_json(&json!({ "n": a.n, "partial": partial, "rows": v })).as_bytes())?;
        }
        Format::Dot => {
            for (g, _) in &rows {
                out.write_all(to_dot(g, None).as_bytes())?;
            }
        }
        Format::Csv | Format::Human => {
            writeln!(out, "canonical,edges,{}", REPORT_COLUMNS.join(","))?;
            for (g, f) in &rows {
                let vals: Vec<&str> = REPORT_COLUMNS.iter().map(|c| f[c].as_str()).collect();
                writeln!(out, "{},{},{}", canonical_form(g).to_hex(), edge_list(g), vals.join(","))?;
            }
            if partial {
                writeln!(out, "# partial: budget exceeded")?;
            }
        }
    }
    Ok(if partial { EXIT_BUDGET } else { EXIT_OK })
}

fn edge_list(g: &Graph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

/// Parses structured `params` output back into a report.
pub fn parse_report(text: &str) -> Result<ParameterReport> {
    serde_json::from_str(text).map_err(|e| anyhow!("malformed report: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_syntax() {
        let c = parse_filter("thrifty=true, c_r!=two_pow_d").unwrap();
        assert_eq!(c.len(), 2);
        assert!(c[1].negated && c[1].value == "two_pow_d");
        assert!(parse_filter("bogus=1").is_err());
        assert!(parse_filter("c_r").is_err());
        let mut f = BTreeMap::new();
        for (k, v) in [("thrifty", "true"), ("c_r", "4"), ("two_pow_d", "4")] {
            f.insert(k, v.to_string());
        }
        assert!(!matches(&f, &c));
        assert!(matches(&f, &parse_filter("c_r=two_pow_d").unwrap()));
    }

    #[test]
    fn rooted_parsing() {
        assert_eq!(parse_rooted("0,1@1", None, 2).unwrap().root(), 1);
        assert_eq!(parse_rooted("0,1", Some(0), 2).unwrap().root(), 0);
        assert!(parse_rooted("0,1", None, 2).is_err());
        assert!(parse_rooted("0,1@1", Some(0), 2).is_err());
        assert!(parse_rooted("0,1@0", None, 3).is_err());
    }
}
