//! Argument parsing and command execution for the `clique-lab` binary.
//!
//! Every command reads one graph source (a graph6 token, an edge-list file, a
//! named graph, or a corpus) and writes JSON-lines records: a header with run
//! metadata, per-graph records in corpus order, and a closing summary.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use clique_lab::dynamics::{classify_behavior, Budgets, Verdict, DEFAULT_MAX_ITERATIONS};
use clique_lab::generator::{enumerate_connected_bounded, filter_graph6_corpus, CorpusSpec};
use clique_lab::helly::{
    find_bad_extended_triangle, find_uncovered_hajos_embedding, hajos_compatible,
};
use clique_lab::lemmas::{check_prepared, LemmaId, LemmaReport, LemmaVerdict};
use clique_lab::structure::K2Structure;
use clique_lab::{iterate, maximal_cliques, parse_graph6, to_graph6, Graph, Named};

pub const THREADS_ENV: &str = "CLIQUE_LAB_THREADS";
const DEFAULT_VERTEX_BUDGET: usize = clique_lab::cliques::DEFAULT_VERTEX_BUDGET;
/// Graphs processed per parallel batch before their records are written.
const BATCH: usize = 256;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] clique_lab::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "clique-lab",
    version,
    about = "Iterated clique graphs and low-degree convergence checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for corpus runs; the environment variable
    /// CLIQUE_LAB_THREADS applies when this is absent.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximal cliques.
    Cliques(InputArgs),
    /// The iterated clique graph `K^steps(G)`.
    Kgraph(KgraphArgs),
    /// Orders of `K^0 .. K^steps`, truncated at the vertex budget.
    Iterate(IterateArgs),
    /// Convergence classification.
    Behavior(BehaviorArgs),
    /// Clique-Helly test.
    Helly(InputArgs),
    /// Hereditary clique-Helly test through Hajós embeddings.
    Hch(InputArgs),
    /// Stars and neckties of `K²(G)`.
    Classify(InputArgs),
    /// Structure checks on each graph.
    Lemmas(LemmasArgs),
    /// Full corpus verification.
    Verify(VerifyArgs),
    /// Corpus generation.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct CorpusArgs {
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub delta_max: Option<usize>,
    #[arg(long, conflicts_with = "include_octahedron")]
    pub exclude_octahedron: bool,
    /// Keep the 6-vertex octahedron where it is dropped by default (verify).
    #[arg(long)]
    pub include_octahedron: bool,
    /// Include disconnected graphs.
    #[arg(long)]
    pub all_graphs: bool,
    /// Read the corpus from a graph6 file instead of generating it.
    #[arg(long)]
    pub corpus_file: Option<PathBuf>,
}

impl CorpusArgs {
    fn given(&self) -> bool {
        self.n_min.is_some()
            || self.n_max.is_some()
            || self.delta_max.is_some()
            || self.exclude_octahedron
            || self.include_octahedron
            || self.all_graphs
            || self.corpus_file.is_some()
    }

    fn spec(&self, exclude_by_default: bool) -> CorpusSpec {
        let n_min = self.n_min.unwrap_or(1);
        CorpusSpec {
            n_min,
            n_max: self.n_max.unwrap_or(n_min.max(8)),
            delta_max: self.delta_max.unwrap_or(4),
            exclude_octahedron: self.exclude_octahedron
                || (exclude_by_default && !self.include_octahedron),
            connected_only: !self.all_graphs,
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct InputArgs {
    /// A graph6 token.
    #[arg(long)]
    pub graph6: Option<String>,
    /// An edge-list file: the order, then one `u v` pair per line.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// k<n>, c<n>, p<n>, octahedron<d>, hajos_sun, inner_pair_vertex, inner_pair_edge.
    #[arg(long)]
    pub named: Option<String>,
    #[command(flatten)]
    pub corpus: CorpusArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    #[arg(long, default_value_t = DEFAULT_MAX_ITERATIONS, value_parser = positive)]
    pub max_iter: usize,
    #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET, value_parser = positive)]
    pub vertex_budget: usize,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        Budgets {
            max_iterations: self.max_iter,
            vertex_budget: self.vertex_budget,
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Args)]
pub struct KgraphArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 1)]
    pub steps: usize,
    #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET, value_parser = positive)]
    pub vertex_budget: usize,
}

#[derive(Debug, Clone, Args)]
pub struct IterateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = DEFAULT_MAX_ITERATIONS)]
    pub steps: usize,
    #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET, value_parser = positive)]
    pub vertex_budget: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BehaviorArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub budgets: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LemmasArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub budgets: BudgetArgs,
    /// Run only these checks (repeatable); all by default.
    #[arg(long = "lemma", value_parser = parse_lemma)]
    pub lemmas: Vec<LemmaId>,
}

fn parse_lemma(s: &str) -> Result<LemmaId, String> {
    s.parse().map_err(|e: clique_lab::Error| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub budgets: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
}

/// Parses and validates arguments; `argv[0]` is the program name.
pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    if let Some(input) = cli.command.input() {
        let sources = [
            input.graph6.is_some(),
            input.edges.is_some(),
            input.named.is_some(),
            input.corpus.given(),
        ];
        match sources.iter().filter(|&&s| s).count() {
            0 => {
                return Err(Cli::command().error(
                    ErrorKind::MissingRequiredArgument,
                    "one input source is required: --graph6, --edges, --named, or corpus flags",
                ))
            }
            1 => {}
            _ => {
                return Err(Cli::command().error(
                    ErrorKind::ArgumentConflict,
                    "input sources are mutually exclusive: give exactly one of --graph6, --edges, --named, or corpus flags",
                ))
            }
        }
    }
    Ok(cli)
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Cliques(_) => "cliques",
            Command::Kgraph(_) => "kgraph",
            Command::Iterate(_) => "iterate",
            Command::Behavior(_) => "behavior",
            Command::Helly(_) => "helly",
            Command::Hch(_) => "hch",
            Command::Classify(_) => "classify",
            Command::Lemmas(_) => "lemmas",
            Command::Verify(_) => "verify",
            Command::Gen(_) => "gen",
        }
    }

    fn input(&self) -> Option<&InputArgs> {
        match self {
            Command::Cliques(a) | Command::Helly(a) | Command::Hch(a) | Command::Classify(a) => {
                Some(a)
            }
            Command::Kgraph(a) => Some(&a.input),
            Command::Iterate(a) => Some(&a.input),
            Command::Behavior(a) => Some(&a.input),
            Command::Lemmas(a) => Some(&a.input),
            Command::Verify(_) | Command::Gen(_) => None,
        }
    }
}

/// A graph to process with its stable identifier.
#[derive(Debug, Clone)]
pub struct Host {
    pub index: usize,
    pub id: String,
    pub graph: Graph,
}

fn host_id(graph: &Graph, fallback: usize) -> String {
    to_graph6(graph).unwrap_or_else(|_| format!("#{fallback}"))
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_corpus(
    args: &CorpusArgs,
    exclude_by_default: bool,
) -> Result<(CorpusSpec, Vec<Graph>), CliError> {
    let spec = args.spec(exclude_by_default);
    let graphs = match &args.corpus_file {
        Some(path) => filter_graph6_corpus(&read(path)?, &spec)?,
        None => enumerate_connected_bounded(&spec)?,
    };
    Ok((spec, graphs))
}

fn hosts_from(graphs: Vec<Graph>) -> Vec<Host> {
    graphs
        .into_iter()
        .enumerate()
        .map(|(index, graph)| Host {
            index,
            id: host_id(&graph, index),
            graph,
        })
        .collect()
}

/// Resolves the input source of a per-graph command.
pub fn load_hosts(input: &InputArgs) -> Result<Vec<Host>, CliError> {
    let graph = if let Some(token) = &input.graph6 {
        parse_graph6(token)?
    } else if let Some(path) = &input.edges {
        Graph::parse_edge_list_text(&read(path)?)?
    } else if let Some(name) = &input.named {
        name.parse::<Named>()?.build()?
    } else {
        return Ok(hosts_from(load_corpus(&input.corpus, false)?.1));
    };
    if graph.is_empty() {
        return Err(clique_lab::Error::EmptyGraph.into());
    }
    Ok(hosts_from(vec![graph]))
}

/// Counters behind the summary record and the exit status.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Tally {
    pub graphs: usize,
    pub convergent: usize,
    pub budget_exceeded: usize,
    pub clique_helly: usize,
    /// Clique-Helly graphs that did not classify as convergent.
    pub helly_not_convergent: usize,
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
    pub not_applicable: usize,
    /// Negative answers of `helly` and `hch`.
    pub negative: usize,
}

impl Tally {
    fn add(&mut self, other: &Tally) {
        self.graphs += other.graphs;
        self.convergent += other.convergent;
        self.budget_exceeded += other.budget_exceeded;
        self.clique_helly += other.clique_helly;
        self.helly_not_convergent += other.helly_not_convergent;
        self.pass += other.pass;
        self.vacuous += other.vacuous;
        self.fail += other.fail;
        self.not_applicable += other.not_applicable;
        self.negative += other.negative;
    }

    pub fn ok(&self) -> bool {
        self.fail == 0
            && self.budget_exceeded == 0
            && self.negative == 0
            && self.helly_not_convergent == 0
    }
}

/// Output of one host: JSON records, optional DOT documents, and counters.
#[derive(Debug, Default)]
struct HostOutput {
    records: Vec<Value>,
    dot: Vec<String>,
    tally: Tally,
}

fn record(kind: &str, host: &Host) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("record".into(), kind.into());
    m.insert("index".into(), host.index.into());
    m.insert("graph6".into(), host.id.clone().into());
    m
}

fn extend_with<T: Serialize>(m: &mut Map<String, Value>, value: &T) -> Result<(), CliError> {
    match serde_json::to_value(value)? {
        Value::Object(fields) => m.extend(fields),
        other => {
            m.insert("value".into(), other);
        }
    }
    Ok(())
}

fn sets(family: impl IntoIterator<Item = Vec<usize>>) -> Value {
    Value::Array(family.into_iter().map(|c| json!(c)).collect())
}

fn graph_summary(m: &mut Map<String, Value>, g: &Graph) {
    m.insert("order".into(), g.order().into());
    m.insert("edges".into(), g.edge_count().into());
    if let Ok(g6) = to_graph6(g) {
        m.insert("graph".into(), g6.into());
    }
}

fn lemma_record(
    host: &Host,
    id: LemmaId,
    report: clique_lab::Result<LemmaReport>,
    tally: &mut Tally,
) -> Result<Value, CliError> {
    let mut m = record("lemma", host);
    match report {
        Ok(report) => {
            match report.verdict {
                LemmaVerdict::Pass => tally.pass += 1,
                LemmaVerdict::Vacuous => tally.vacuous += 1,
                LemmaVerdict::Fail { .. } => tally.fail += 1,
            }
            m.insert("lemma".into(), id.name().into());
            extend_with(&mut m, &report.verdict)?;
        }
        Err(clique_lab::Error::Precondition(reason)) => {
            tally.not_applicable += 1;
            m.insert("lemma".into(), id.name().into());
            m.insert("verdict".into(), "not_applicable".into());
            m.insert("requires".into(), reason.into());
        }
        Err(e) => return Err(e.into()),
    }
    Ok(Value::Object(m))
}

fn behavior_value(
    host: &Host,
    budgets: Budgets,
    tally: &mut Tally,
) -> Result<(Value, bool), CliError> {
    let behavior = classify_behavior(&host.graph, budgets)?;
    let convergent = behavior.is_convergent();
    if convergent {
        tally.convergent += 1;
    } else {
        tally.budget_exceeded += 1;
    }
    Ok((serde_json::to_value(&behavior)?, convergent))
}

fn process(cmd: &Command, host: &Host) -> Result<HostOutput, CliError> {
    let g = &host.graph;
    let mut out = HostOutput::default();
    out.tally.graphs = 1;
    match cmd {
        Command::Cliques(_) => {
            let family = maximal_cliques(g)?;
            let mut m = record("cliques", host);
            m.insert("count".into(), family.len().into());
            m.insert("max_size".into(), family.max_clique_size().into());
            m.insert("cliques".into(), sets(family.iter().map(|c| c.to_vec())));
            out.records.push(Value::Object(m));
            out.dot.push(g.to_dot(None));
        }
        Command::Kgraph(args) => {
            let iteration = iterate(g, args.steps, args.vertex_budget)?;
            let mut m = record("kgraph", host);
            m.insert("steps".into(), args.steps.into());
            let last = iteration.graphs.last().expect("K^0 is always present");
            if let Some(t) = iteration.truncation {
                out.tally.budget_exceeded += 1;
                extend_with(&mut m, &json!({ "truncation": t }))?;
            } else {
                graph_summary(&mut m, last);
                if args.steps == 1 {
                    let family = maximal_cliques(g)?;
                    m.insert("cliques".into(), sets(family.iter().map(|c| c.to_vec())));
                }
                out.dot.push(last.to_dot(None));
            }
            out.records.push(Value::Object(m));
        }
        Command::Iterate(args) => {
            let iteration = iterate(g, args.steps, args.vertex_budget)?;
            let mut m = record("iterate", host);
            m.insert("orders".into(), json!(iteration.orders()));
            m.insert(
                "octahedra".into(),
                json!(iteration
                    .graphs
                    .iter()
                    .map(Graph::is_octahedron)
                    .collect::<Vec<_>>()),
            );
            m.insert(
                "truncation".into(),
                serde_json::to_value(iteration.truncation)?,
            );
            out.records.push(Value::Object(m));
            if let Some(last) = iteration.graphs.last() {
                out.dot.push(last.to_dot(None));
            }
        }
        Command::Behavior(args) => {
            let mut m = record("behavior", host);
            let (value, _) = behavior_value(host, args.budgets.budgets(), &mut out.tally)?;
            extend_with(&mut m, &value)?;
            out.records.push(Value::Object(m));
        }
        Command::Helly(_) => {
            let bad = find_bad_extended_triangle(g);
            let mut m = record("helly", host);
            m.insert("clique_helly".into(), bad.is_none().into());
            m.insert("bad_triangle".into(), json!(bad));
            if bad.is_some() {
                out.tally.negative += 1;
            } else {
                out.tally.clique_helly += 1;
            }
            out.records.push(Value::Object(m));
        }
        Command::Hch(_) => {
            let embedding = find_uncovered_hajos_embedding(g);
            let mut m = record("hch", host);
            m.insert("hajos_compatible".into(), embedding.is_none().into());
            m.insert("embedding".into(), serde_json::to_value(embedding)?);
            if embedding.is_some() {
                out.tally.negative += 1;
            }
            out.records.push(Value::Object(m));
        }
        Command::Classify(_) => {
            let s = K2Structure::new(g)?;
            let mut m = record("classify", host);
            extend_with(&mut m, &s.report())?;
            out.records.push(Value::Object(m));
            out.dot.push(s.dot());
        }
        Command::Lemmas(args) => {
            let s = K2Structure::new(g)?;
            let ids: Vec<LemmaId> = if args.lemmas.is_empty() {
                LemmaId::ALL.to_vec()
            } else {
                args.lemmas.clone()
            };
            let behavior = if ids.contains(&LemmaId::DivergenceNeedsDegreeFive) && g.is_connected()
            {
                Some(classify_behavior(g, args.budgets.budgets())?)
            } else {
                None
            };
            for id in ids {
                let report = check_prepared(id, &s, behavior.as_ref(), &host.id);
                out.records
                    .push(lemma_record(host, id, report, &mut out.tally)?);
            }
        }
        Command::Verify(args) => verify_host(host, args.budgets.budgets(), &mut out)?,
        Command::Gen(_) => {
            let mut m = record("graph", host);
            m.insert("order".into(), g.order().into());
            m.insert("edges".into(), g.edge_count().into());
            m.insert("max_degree".into(), g.max_degree().into());
            out.records.push(Value::Object(m));
            out.dot.push(g.to_dot(None));
        }
    }
    Ok(out)
}

/// Behavior, Helly checks, `K²` classification and every lemma for one host.
fn verify_host(host: &Host, budgets: Budgets, out: &mut HostOutput) -> Result<(), CliError> {
    let g = &host.graph;
    let behavior = classify_behavior(g, budgets)?;
    let convergent = behavior.is_convergent();
    if convergent {
        out.tally.convergent += 1;
    } else {
        out.tally.budget_exceeded += 1;
    }
    let clique_helly = find_bad_extended_triangle(g).is_none();
    if clique_helly {
        out.tally.clique_helly += 1;
        if !convergent {
            out.tally.helly_not_convergent += 1;
        }
    }
    let s = K2Structure::new(g)?;
    let mut m = record("graph", host);
    m.insert("order".into(), g.order().into());
    m.insert("edges".into(), g.edge_count().into());
    m.insert("max_degree".into(), g.max_degree().into());
    m.insert("low_degree".into(), g.is_low_degree().into());
    m.insert("clique_helly".into(), clique_helly.into());
    m.insert("hajos_compatible".into(), hajos_compatible(g).into());
    m.insert(
        "k2".into(),
        json!({
            "order": s.vertices().len(),
            "stars": s.star_count(),
            "neckties": s.necktie_count(),
            "unmatched_neckties": s.unmatched_neckties().len(),
            "multi_center_stars": s.multi_center_stars().len(),
        }),
    );
    let verdict = match behavior.verdict {
        Verdict::Convergent { .. } => "convergent",
        Verdict::BudgetExceeded { .. } => "budget_exceeded",
    };
    m.insert("behavior".into(), verdict.into());
    m.insert("detail".into(), serde_json::to_value(&behavior)?);
    out.records.push(Value::Object(m));
    for id in LemmaId::ALL {
        let report = check_prepared(id, &s, Some(&behavior), &host.id);
        let rec = lemma_record(host, id, report, &mut out.tally)?;
        out.records.push(rec);
    }
    Ok(())
}

/// Resolves the worker count: the flag, then the environment, then the
/// available parallelism.
pub fn thread_count(flag: Option<u64>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n as usize);
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) => Ok(std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)),
    }
}

fn render_text(value: &Value, prefix: &str, out: &mut String) {
    match value {
        Value::Object(m) => {
            for (k, v) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                render_text(v, &key, out);
            }
        }
        Value::Null => {}
        other => {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(prefix);
            out.push('=');
            match other {
                Value::String(s) => out.push_str(s),
                v => out.push_str(&v.to_string()),
            }
        }
    }
}

fn write_record(
    cmd: &Command,
    format: Format,
    value: &Value,
    w: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => writeln!(w, "{}", serde_json::to_string(value)?)?,
        Format::Text => {
            if let Command::Gen(_) = cmd {
                // Plain graph6 lines, so the output is itself a corpus file.
                if value.get("record").and_then(Value::as_str) == Some("graph") {
                    writeln!(w, "{}", value["graph6"].as_str().unwrap_or_default())?;
                }
            } else {
                let mut line = String::new();
                render_text(value, "", &mut line);
                writeln!(w, "{line}")?;
            }
        }
        Format::Dot => {}
    }
    Ok(())
}

/// Result of a run: the exit status and the merged counters.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub exit_code: i32,
    pub tally: Tally,
}

/// Runs `cli`, writing records to `w`. Per-graph work is spread over a
/// worker pool; records are written in corpus order.
pub fn execute(cli: &Cli, w: &mut dyn Write) -> Result<Outcome, CliError> {
    let cmd = &cli.command;
    if cli.format == Format::Dot
        && !matches!(
            cmd,
            Command::Cliques(_)
                | Command::Kgraph(_)
                | Command::Iterate(_)
                | Command::Classify(_)
                | Command::Gen(_)
        )
    {
        return Err(CliError::Usage(format!(
            "dot output is not available for {}",
            cmd.name()
        )));
    }
    let threads = thread_count(cli.threads)?;
    let (spec, hosts) = match cmd {
        Command::Verify(a) => {
            let (spec, graphs) = load_corpus(&a.corpus, true)?;
            (Some(spec), hosts_from(graphs))
        }
        Command::Gen(a) => {
            let (spec, graphs) = load_corpus(&a.corpus, false)?;
            (Some(spec), hosts_from(graphs))
        }
        _ => {
            let input = cmd.input().expect("per-graph command");
            let spec = input.corpus.given().then(|| input.corpus.spec(false));
            (spec, load_hosts(input)?)
        }
    };
    let header = json!({
        "record": "header",
        "tool": "clique-lab",
        "version": env!("CARGO_PKG_VERSION"),
        "command": cmd.name(),
        "corpus": spec,
        "threads": threads,
    });
    write_record(cmd, cli.format, &header, w)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut tally = Tally::default();
    for batch in hosts.chunks(BATCH) {
        let outputs: Vec<Result<HostOutput, CliError>> =
            pool.install(|| batch.par_iter().map(|h| process(cmd, h)).collect());
        for output in outputs {
            let output = output?;
            tally.add(&output.tally);
            for r in &output.records {
                write_record(cmd, cli.format, r, w)?;
            }
            if cli.format == Format::Dot {
                for d in &output.dot {
                    w.write_all(d.as_bytes())?;
                }
            }
        }
        w.flush()?;
    }
    let ok = tally.ok();
    let mut summary = Map::new();
    summary.insert("record".into(), "summary".into());
    extend_with(&mut summary, &tally)?;
    summary.insert("ok".into(), ok.into());
    write_record(cmd, cli.format, &Value::Object(summary), w)?;
    w.flush()?;
    Ok(Outcome {
        exit_code: if ok { 0 } else { 1 },
        tally,
    })
}

/// Parses `argv`, runs it, and returns captured output with the exit status.
/// Usage errors yield status 2 and the rendered message.
pub fn run_captured<I, T>(argv: I) -> (Vec<u8>, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match parse_args(argv) {
        Ok(cli) => cli,
        Err(e) => return (e.render().to_string().into_bytes(), e.exit_code()),
    };
    let mut buf = Vec::new();
    match execute(&cli, &mut buf) {
        Ok(outcome) => (buf, outcome.exit_code),
        Err(e) => {
            let _ = writeln!(buf, "error: {e}");
            (buf, 2)
        }
    }
}
