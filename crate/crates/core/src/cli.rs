//! Command-line front end. Machine output is JSON (or graph text) on stdout
//! or `--out`; human-readable summaries go to stderr.

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use domcrit::criticality::{CriticalityProfile, Partition};
use domcrit::domination::{all_gamma_sets, domination_number, DEFAULT_BUDGET};
use domcrit::families::{
    build_fk, build_fpp3, build_fstar2, enumerate_fk, enumerate_fstar_k, recognize_fk,
    recognize_fstar_k, FamilyInstance, FkParams, FkRecognition, Fpp3Variant, Fstar2Variant,
    FstarCertificate,
};
use domcrit::parallel::with_jobs;
use domcrit::verify::{
    self, ScanConfig, ScanSource, Status, TheoremId, VerifyConfig, DEFAULT_SEED,
    DEFAULT_SWEEP_PAIRS,
};
use domcrit::{Error, Execution, Graph, GraphFormat, VertexSet};

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "domcrit",
    version,
    about = "Domination criticality of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Candidate-set budget for γ-set enumeration.
    #[arg(long, global = true, env = "DOMCRIT_BUDGET")]
    budget: Option<u128>,

    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Write machine output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// γ, γ-sets, vertex classes, criticality flags and family certificates.
    Analyze {
        /// Input file, or "-" for stdin.
        input: String,
        /// Input format; detected from the content when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Build family members as graph6, with a JSON sidecar next to `--out`.
    Gen(GenArgs),
    /// Run the checks and write a JSON report.
    Verify(VerifyArgs),
    /// Decide whether two graphs are isomorphic.
    Iso {
        g: String,
        h: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Convert between graph6 and edge-list text.
    Convert {
        input: String,
        /// Input format; detected from the content when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Output format.
        #[arg(long, value_enum)]
        to: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Graph6 => GraphFormat::Graph6,
            Format::Edgelist => GraphFormat::Edgelist,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// A chain G(m_1, ..., m_{k-1}); needs --m.
    Fk,
    /// co((m+1)K2), co(mK2 ∪ K3) or co(mK2 ∪ P3); needs --m and --shape.
    Fstar2,
    /// G¹(m1, m2) or G²(m1, m2); needs --m1, --m2, --variant.
    Fpp3,
    /// Every F_k member up to --max-order.
    FkAll,
    /// Every F*_k member up to --max-order.
    Fstar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Shape {
    Matching,
    K3,
    P3,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    /// Comma-separated block sizes for fk; a single m for fstar2.
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    #[arg(long)]
    m1: Option<usize>,
    #[arg(long)]
    m2: Option<usize>,
    /// 1 for the non-adjacent twin, 2 for the adjacent twin.
    #[arg(long)]
    variant: Option<u8>,
    #[arg(long, value_enum)]
    shape: Option<Shape>,
    #[arg(long)]
    max_order: Option<usize>,
    /// Sidecar path; defaults to `<out>.json` when --out is given.
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Comma-separated check ids (e.g. ThmA,Lem1_22); all when omitted.
    #[arg(long, value_delimiter = ',')]
    theorems: Vec<String>,
    /// Largest order in the exhaustive scan (at most 10).
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Scan connected graphs only.
    #[arg(long)]
    connected_only: bool,
    /// Scan the graphs in this file instead of enumerating.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Scan generated family members instead of all graphs.
    #[arg(long, conflicts_with = "input")]
    families: bool,
    #[arg(long, default_value_t = DEFAULT_SWEEP_PAIRS)]
    sweep_pairs: usize,
}

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Lib(Error::BudgetExceeded { .. } | Error::OrderCapExceeded { .. }) => {
                ExitCode::from(EXIT_BUDGET)
            }
            _ => ExitCode::from(EXIT_USAGE),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => f.write_str(e),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Lib(Error::InvalidParameter(msg.into()))
}

fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("reading {path}: {e}")))
    }
}

fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("n ") || l.contains(' ') => GraphFormat::Edgelist,
        _ => GraphFormat::Graph6,
    }
}

fn read_graphs(path: &str, format: Option<Format>) -> CliResult<Vec<Graph>> {
    let text = read_input(path)?;
    let format = format
        .map(GraphFormat::from)
        .unwrap_or_else(|| detect_format(&text));
    Ok(format.parse_all(&text)?)
}

fn read_one(path: &str, format: Option<Format>) -> CliResult<Graph> {
    let mut graphs = read_graphs(path, format)?;
    if graphs.len() != 1 {
        return Err(usage(format!(
            "{path}: expected one graph, found {}",
            graphs.len()
        )));
    }
    Ok(graphs.remove(0))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => write_file(p, text),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("writing stdout: {e}"))),
    }
}

fn to_json_line(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

pub fn run(cli: Cli) -> CliResult<ExitCode> {
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    if budget == 0 {
        return Err(usage("budget must be positive"));
    }
    let out = cli.out.as_deref();
    let jobs = cli.jobs;
    match cli.command {
        Command::Analyze { input, format } => {
            let graphs = read_graphs(&input, format)?;
            let reports: Vec<Analysis> = with_jobs(jobs, || {
                Execution::Parallel.map(&graphs, |g| analyze(g, budget))
            });
            for r in &reports {
                let diam = r.diameter.map_or("inf".to_string(), |d| d.to_string());
                eprintln!(
                    "{:<12} n={:<3} m={:<4} γ={:<3} diam={:<4} critical={} bicritical={} weak_bicritical={}",
                    r.graph6, r.n, r.edges, r.gamma, diam, r.critical, r.bicritical, r.weak_bicritical
                );
            }
            emit(out, &to_json_line(&reports))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen(args) => {
            let instances = generate(&args)?;
            let text: String = instances
                .iter()
                .map(|i| format!("{}\n", i.graph.to_graph6()))
                .collect();
            emit(out, &text)?;
            let sidecar = args
                .sidecar
                .clone()
                .or_else(|| out.map(|p| PathBuf::from(format!("{}.json", p.display()))));
            if let Some(path) = sidecar {
                write_file(&path, &to_json_line(&instances))?;
            }
            for i in &instances {
                eprintln!(
                    "k={} n={} {} identifiable={}",
                    i.k,
                    i.graph.order(),
                    i.graph.to_graph6(),
                    i.identifiable
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let config = verify_config(&args, budget)?;
            let report = with_jobs(jobs, || verify::run(&config))?;
            emit(out, &report.to_json())?;
            eprint!("{}", render_table(&report));
            Ok(if report.failures() > 0 {
                ExitCode::from(EXIT_VERIFY_FAILED)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Iso { g, h, format } => {
            let g = read_one(&g, format)?;
            let h = read_one(&h, format)?;
            let mapping = g.isomorphism_to(&h);
            eprintln!("{}", if mapping.is_some() { "yes" } else { "no" });
            emit(
                out,
                &to_json_line(&json!({ "isomorphic": mapping.is_some(), "mapping": mapping })),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { input, format, to } => {
            let graphs = read_graphs(&input, format)?;
            let to = GraphFormat::from(to);
            if to == GraphFormat::Edgelist && graphs.len() != 1 {
                return Err(usage("edge-list output holds exactly one graph"));
            }
            let text: String = graphs.iter().map(|g| to.write(g)).collect();
            emit(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum Count {
    Known(usize),
    Unknown(&'static str),
}

#[derive(Serialize)]
struct ComponentSummary {
    vertices: VertexSet,
    gamma: usize,
    critical: bool,
    weak_bicritical: bool,
}

#[derive(Serialize)]
struct Analysis {
    graph6: String,
    n: usize,
    edges: usize,
    gamma: usize,
    gamma_set: VertexSet,
    /// "unknown" when enumeration would exceed the budget.
    gamma_set_count: Count,
    connected: bool,
    diameter: Option<usize>,
    diametrical_vertices: Option<VertexSet>,
    partition: Partition,
    critical: bool,
    bicritical: bool,
    weak_bicritical: bool,
    components: Vec<ComponentSummary>,
    fk: Option<FkRecognition>,
    fstar: Option<FstarCertificate>,
}

fn analyze(g: &Graph, budget: u128) -> Analysis {
    let dom = domination_number(g);
    let gamma_set_count = match all_gamma_sets(g, budget) {
        Ok(sets) => Count::Known(sets.len()),
        Err(_) => Count::Unknown("unknown"),
    };
    let profile = CriticalityProfile::compute(g);
    let connected = g.is_connected();
    let components = if connected {
        Vec::new()
    } else {
        g.components()
            .into_iter()
            .map(|c| {
                let p = CriticalityProfile::compute(&g.induced(c).graph);
                ComponentSummary {
                    vertices: c,
                    gamma: p.gamma,
                    critical: p.is_critical,
                    weak_bicritical: p.is_weak_bicritical,
                }
            })
            .collect()
    };
    Analysis {
        graph6: g.to_graph6(),
        n: g.order(),
        edges: g.size(),
        gamma: dom.gamma,
        gamma_set: dom.witness,
        gamma_set_count,
        connected,
        diameter: g.diameter().filter(|_| connected),
        diametrical_vertices: g.diametrical_vertices().ok(),
        partition: profile.partition,
        critical: profile.is_critical,
        bicritical: profile.is_bicritical,
        weak_bicritical: profile.is_weak_bicritical,
        components,
        fk: recognize_fk(g),
        fstar: recognize_fstar_k(g),
    }
}

fn generate(args: &GenArgs) -> CliResult<Vec<FamilyInstance>> {
    let need =
        |v: Option<usize>, name: &str| v.ok_or_else(|| usage(format!("--{name} is required")));
    Ok(match args.family {
        Family::Fk => {
            let params = FkParams::new(args.m.clone())?;
            if let Some(k) = args.k {
                if k != params.k() {
                    return Err(usage(format!(
                        "--k {k} disagrees with {} block sizes",
                        args.m.len()
                    )));
                }
            }
            vec![build_fk(&params)?]
        }
        Family::Fstar2 => {
            let [m] = args.m[..] else {
                return Err(usage("fstar2 needs exactly one --m"));
            };
            let variant = match args.shape.unwrap_or(Shape::Matching) {
                Shape::Matching => Fstar2Variant::Matching(m),
                Shape::K3 => Fstar2Variant::MatchingPlusK3(m),
                Shape::P3 => Fstar2Variant::MatchingPlusP3(m),
            };
            vec![build_fstar2(variant)?]
        }
        Family::Fpp3 => {
            let variant = Fpp3Variant::from_index(args.variant.unwrap_or(1))?;
            vec![build_fpp3(
                need(args.m1, "m1")?,
                need(args.m2, "m2")?,
                variant,
            )?]
        }
        Family::FkAll => enumerate_fk(need(args.k, "k")?, need(args.max_order, "max-order")?),
        Family::Fstar => {
            let k = need(args.k, "k")?;
            if k < 2 {
                return Err(usage("--k must be at least 2"));
            }
            enumerate_fstar_k(k, need(args.max_order, "max-order")?)
        }
    })
}

fn verify_config(args: &VerifyArgs, budget: u128) -> CliResult<VerifyConfig> {
    let theorems = if args.theorems.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        args.theorems
            .iter()
            .map(|t| t.parse())
            .collect::<Result<Vec<TheoremId>, Error>>()?
    };
    let source = match (&args.input, args.families) {
        (Some(path), _) => ScanSource::File(read_graphs(path, args.format)?),
        (None, true) => ScanSource::FamilyGenerated,
        (None, false) => ScanSource::EnumeratedAll,
    };
    Ok(VerifyConfig {
        theorems,
        scan: ScanConfig {
            n_max: args.n_max,
            connected_only: args.connected_only,
            source,
        },
        seed: args.seed,
        sweep_pairs: args.sweep_pairs,
        budget,
        execution: Execution::Parallel,
        ..VerifyConfig::default()
    })
}

fn render_table(report: &verify::VerificationReport) -> String {
    let mut s = format!(
        "{:<14} {:>8} {:>10} {:>8} {:>6} {:>10}\n",
        "check", "status", "hypothesis", "pass", "fail", "skipped"
    );
    for c in &report.checks {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        s.push_str(&format!(
            "{:<14} {:>8} {:>10} {:>8} {:>6} {:>10}\n",
            c.theorem_id.tag(),
            status,
            c.hypothesis_count,
            c.pass_count,
            c.fail_count,
            c.skipped_count
        ));
    }
    s
}
