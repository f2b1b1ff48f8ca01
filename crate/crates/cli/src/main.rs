use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use decycling::bench::{parse_bench_spec, render_summary, rows_to_csv, run_bench, summarize, BenchConfig, Strategy};
use decycling::ci::build_ci;
use decycling::decomp::{decompose_greedy, CycleDecomposition, DecompositionJson};
use decycling::decycle::{analyze, analyze_components, exact_decycling_number, AnalyzeOptions, DEFAULT_ORACLE_LIMIT};
use decycling::families::FamilySpec;
use decycling::graph::Multigraph;
use decycling::io::{parse_edge_list, to_dot, to_edge_list, to_json};
use decycling::optimize::{optimize_decomposition, Method};
use decycling::Error;

#[derive(Parser)]
#[command(name = "decycle", version, about = "Decycling sets and bounds for even multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every bound for one decomposition.
    Analyze(AnalyzeArgs),
    /// Search for a decomposition with small CI cycle rank.
    Optimize(OptimizeArgs),
    /// Compute the decycling number exactly.
    Exact(ExactArgs),
    /// Print a generated graph.
    Gen(GenArgs),
    /// Run the bound-tightness benchmark over a spec file.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GraphSource {
    /// Edge-list file, or `-` for stdin.
    #[arg(required_unless_present = "family", conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Generate the graph instead of reading it.
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    petals: Option<usize>,
    #[arg(long)]
    core: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    cycles: Option<usize>,
    /// Seed for `random_even`.
    #[arg(long, default_value_t = 0)]
    graph_seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyName {
    Cycle,
    TriangleChain,
    Flower,
    Figure1,
    Figure2,
    RandomEven,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Decomposition JSON to analyse instead of a greedy one.
    #[arg(long)]
    decomposition: Option<PathBuf>,
    /// Seed for the greedy decomposition.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    /// Skip the exact oracle.
    #[arg(long)]
    no_exact: bool,
    /// Reject disconnected input instead of summing over components.
    #[arg(long)]
    require_connected: bool,
    #[arg(long)]
    json: bool,
    /// Write graph.dot and ci.dot into this directory.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct OptimizeArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, default_value = "local_search")]
    method: Method,
    /// Evaluation budget.
    #[arg(long, default_value_t = 1000)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edges,
    Json,
    Dot,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value = "edges")]
    format: GraphFormat,
}

#[derive(Args)]
struct BenchArgs {
    /// Spec file, one family per line.
    spec: PathBuf,
    /// CSV output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comma-separated subset of greedy, exhaustive, local_search.
    #[arg(long, value_delimiter = ',')]
    strategies: Option<Vec<String>>,
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    #[arg(long, default_value_t = 2000)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotEven => Failure::Domain(
                "graph is not even: every vertex needs even degree, and only even graphs are supported".into(),
            ),
            Error::Disconnected
            | Error::InvalidDecomposition(_)
            | Error::CyclicCi
            | Error::OracleLimit { .. }
            | Error::BudgetExceeded(_)
            | Error::Internal(_) => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::Optimize(a) => run_optimize(a),
        Command::Exact(a) => run_exact(a),
        Command::Gen(a) => run_gen(a),
        Command::Bench(a) => run_bench_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("rejected: {m}");
            ExitCode::from(2)
        }
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn need(value: Option<usize>, flag: &str, family: &str) -> CliResult<usize> {
    value.ok_or_else(|| Failure::Usage(format!("--family {family} needs --{flag}")))
}

fn load_graph(src: &GraphSource) -> CliResult<Multigraph> {
    let Some(family) = src.family else {
        let path = src.input.as_ref().expect("clap enforces input or family");
        return Ok(parse_edge_list(&read_text(path)?)?);
    };
    let spec = match family {
        FamilyName::Cycle => FamilySpec::Cycle { k: need(src.k, "k", "cycle")? },
        FamilyName::TriangleChain => FamilySpec::TriangleChain { k: need(src.k, "k", "triangle_chain")? },
        FamilyName::Flower => FamilySpec::Flower {
            petals: need(src.petals, "petals", "flower")?,
            core: need(src.core, "core", "flower")?,
        },
        FamilyName::Figure1 => FamilySpec::Figure1,
        FamilyName::Figure2 => FamilySpec::Figure2,
        FamilyName::RandomEven => FamilySpec::RandomEven {
            n: need(src.n, "n", "random_even")?,
            cycles: need(src.cycles, "cycles", "random_even")?,
            seed: src.graph_seed,
        },
    };
    Ok(spec.generate()?)
}

fn check_even(g: &Multigraph) -> CliResult<()> {
    let odd: Vec<usize> = g.vertices().filter(|&v| g.degree(v) % 2 == 1).collect();
    if odd.is_empty() {
        return Ok(());
    }
    Err(Failure::Domain(format!(
        "graph is not even (odd degree at {odd:?}); only even graphs, where every vertex has even degree, are supported"
    )))
}

fn write_dot(dir: &Path, g: &Multigraph, d: &CycleDecomposition) -> CliResult<()> {
    let ci = build_ci(g, d)?;
    fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
    for (name, body) in [("graph.dot", to_dot(g)), ("ci.dot", ci.to_dot())] {
        let path = dir.join(name);
        fs::write(&path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn to_json_line<T: serde::Serialize>(value: &T) -> CliResult<String> {
    serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))
}

fn run_analyze(a: AnalyzeArgs) -> CliResult<()> {
    let g = load_graph(&a.source)?;
    check_even(&g)?;
    if a.require_connected && !g.is_connected() {
        return Err(Error::Disconnected.into());
    }
    let d = match &a.decomposition {
        Some(path) => DecompositionJson::parse(&read_text(path)?)?.into_decomposition()?,
        None => decompose_greedy(&g, a.seed)?,
    };
    let opts = AnalyzeOptions { seed: a.seed, oracle_limit: (!a.no_exact).then_some(a.oracle_limit) };
    let report = if g.is_connected() { analyze(&g, Some(&d), opts)? } else { analyze_components(&g, Some(&d), opts)? };
    if let Some(dir) = &a.dot {
        write_dot(dir, &g, &d)?;
    }
    if a.json {
        println!("{}", to_json_line(&report)?);
    } else {
        print!("{}", report.render_table());
    }
    Ok(())
}

fn run_optimize(a: OptimizeArgs) -> CliResult<()> {
    let g = load_graph(&a.source)?;
    check_even(&g)?;
    let r = optimize_decomposition(&g, a.method, a.budget, a.seed)?;
    if let Some(dir) = &a.dot {
        write_dot(dir, &g, &r.best_decomposition)?;
    }
    if a.json {
        println!("{}", to_json_line(&r.to_json())?);
    } else {
        println!("method       {}", r.method);
        println!("best rank    {}", r.best_rank);
        println!("best bound   {}", r.best_bound);
        println!("ci simple    {}", r.best_ci.is_simple());
        println!("evaluations  {}", r.evaluations);
        for (i, c) in r.best_decomposition.cycles().iter().enumerate() {
            println!("cycle {i}      {:?}", c.vertices());
        }
    }
    Ok(())
}

fn run_exact(a: ExactArgs) -> CliResult<()> {
    let g = load_graph(&a.source)?;
    check_even(&g)?;
    let (k, set) = exact_decycling_number(&g, Some(a.oracle_limit))?;
    if a.json {
        println!("{}", to_json_line(&serde_json::json!({ "decycling_number": k, "witness": set.vertices() }))?);
    } else {
        println!("decycling number  {k}");
        println!("witness           {:?}", set.vertices());
    }
    Ok(())
}

fn run_gen(a: GenArgs) -> CliResult<()> {
    let g = load_graph(&a.source)?;
    match a.format {
        GraphFormat::Edges => print!("{}", to_edge_list(&g)),
        GraphFormat::Json => println!("{}", to_json(&g)),
        GraphFormat::Dot => print!("{}", to_dot(&g)),
    }
    Ok(())
}

fn run_bench_cmd(a: BenchArgs) -> CliResult<()> {
    let specs = parse_bench_spec(&read_text(&a.spec)?)?;
    let strategies = match &a.strategies {
        Some(names) => names.iter().map(|s| s.parse::<Strategy>()).collect::<Result<Vec<_>, _>>()?,
        None => Strategy::ALL.to_vec(),
    };
    let config = BenchConfig { strategies, oracle_limit: a.oracle_limit, budget: a.budget, seed: a.seed };
    let outcome = run_bench(&specs, &config)?;
    let csv = rows_to_csv(&outcome.rows);
    let summary = render_summary(&summarize(&outcome.rows));
    match &a.out {
        Some(path) => {
            fs::write(path, csv).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            print!("{summary}");
            for (id, st) in &outcome.skipped {
                println!("skipped {id} ({}): over budget", st.name());
            }
        }
        None => {
            print!("{csv}");
            eprint!("{summary}");
        }
    }
    Ok(())
}
