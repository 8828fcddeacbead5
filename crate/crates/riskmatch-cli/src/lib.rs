//! Command implementations behind the `riskmatch` binary: solve one
//! instance, sweep a normalized-risk grid to CSV, generate synthetic
//! uncertain graphs, build coauthorship hypergraphs, and cross-check
//! small instances against the exhaustive oracle.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use riskmatch::generators::{
    attach_bernoulli, attach_gaussian, ba_topology, gnp_topology, Interval, Sampler, SeededRng,
};
use riskmatch::hypergraph::{EdgeDistribution, RiskMeasure, UncertainHypergraph};
use riskmatch::ingest;
use riskmatch::matchers::{ExactMatcher, GreedyMatcher, MatchingOracle};
use riskmatch::oracle::{brute_force_brmwm, brute_force_max_matching, EnumerationBudget};
use riskmatch::solver::{compute_b_max, solve_brmwm, SolveOutcome};

/// Usage errors exit with 1, data errors with 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) => m,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "riskmatch",
    about = "Matchings with maximum expected reward under a hard risk budget \
             on uncertain weighted graphs and hypergraphs",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve one instance at a fixed or normalized risk budget.
    Solve(SolveArgs),
    /// Solve across a grid of normalized budgets and write a CSV.
    Sweep(SweepArgs),
    /// Generate a synthetic uncertain graph.
    Gen(GenArgs),
    /// Build an uncertain coauthorship hypergraph from records.
    IngestCoauthors(IngestArgs),
    /// Exhaustive optimum for small instances (cross-checking).
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MatcherChoice {
    /// 1/k-approximate on rank-k hypergraphs, near-linear time.
    Greedy,
    /// Exact blossom matching; graphs (rank 2) only.
    Exact,
}

impl MatcherChoice {
    fn engine(self) -> &'static dyn MatchingOracle {
        match self {
            MatcherChoice::Greedy => &GreedyMatcher,
            MatcherChoice::Exact => &ExactMatcher,
        }
    }
}

fn parse_measure(s: &str) -> Result<RiskMeasure, CliError> {
    s.parse().map_err(CliError::Usage)
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Absolute risk budget B (exclusive with --normalized-risk).
    #[arg(long)]
    pub risk_bound: Option<f64>,
    /// Budget as a fraction of the greedy risk benchmark B_max. Note
    /// B_max only approximates the largest achievable matching risk,
    /// so 1.0 does not certify the unconstrained optimum.
    #[arg(long)]
    pub normalized_risk: Option<f64>,
    /// Risk measure: std (sum of standard deviations) or var.
    #[arg(long, default_value = "std")]
    pub measure: String,
    #[arg(long, value_enum, default_value_t = MatcherChoice::Greedy)]
    pub matcher: MatcherChoice,
    /// Optional machine-readable JSON report.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, default_value = "std")]
    pub measure: String,
    #[arg(long, value_enum, default_value_t = MatcherChoice::Greedy)]
    pub matcher: MatcherChoice,
    /// Number of grid intervals: the grid is i/N for i = 0..=N.
    #[arg(long, default_value_t = 20)]
    pub grid_steps: usize,
    /// Reserved for generation workflows; sweeping a fixed input is
    /// deterministic on its own.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Leave the runtime_ms column empty so repeated runs are
    /// byte-identical.
    #[arg(long, default_value_t = false)]
    pub omit_timing: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModelChoice {
    Gnp,
    Ba,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DistChoice {
    Bernoulli,
    Gaussian,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub model: ModelChoice,
    #[arg(long)]
    pub n: usize,
    /// Edge probability (gnp model).
    #[arg(long)]
    pub p: Option<f64>,
    /// Edges attached per arriving node (ba model).
    #[arg(long)]
    pub m_attach: Option<usize>,
    #[arg(long, value_enum, default_value_t = DistChoice::Bernoulli)]
    pub dist: DistChoice,
    /// Weight sampler, e.g. uniform:0:1000, gauss:100:16.7, const:5.
    #[arg(long, default_value = "uniform:0:1000")]
    pub weights: String,
    /// Probability sampler over (0, 1].
    #[arg(long, default_value = "uniform:0:1")]
    pub probs: String,
    /// Mean sampler (gaussian graphs).
    #[arg(long, default_value = "uniform:0:1000")]
    pub means: String,
    /// Variance sampler over [0, inf) (gaussian graphs).
    #[arg(long, default_value = "uniform:0:100")]
    pub vars: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct IngestArgs {
    /// Records file: `<citations>\t<author>;<author>;...` per line.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    /// Author-name table (defaults to `<output>.authors`); line i names
    /// node i.
    #[arg(long)]
    pub authors_output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Absolute risk budget; omit both budget flags for the
    /// unconstrained maximum-weight matching.
    #[arg(long)]
    pub risk_bound: Option<f64>,
    #[arg(long)]
    pub normalized_risk: Option<f64>,
    #[arg(long, default_value = "std")]
    pub measure: String,
    /// Refuse instances with more edges than this.
    #[arg(long, default_value_t = 22)]
    pub max_edges: usize,
}

pub fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Sweep(args) => cmd_sweep(&args).map(|_| ()),
        Command::Gen(args) => cmd_gen(&args),
        Command::IngestCoauthors(args) => cmd_ingest_coauthors(&args),
        Command::Oracle(args) => cmd_oracle(&args),
    }
}

fn load_hypergraph(path: &Path) -> Result<UncertainHypergraph, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    ingest::parse_hypergraph(BufReader::new(file))
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

/// Exactly one of an absolute and a normalized budget, resolved to an
/// absolute one.
fn resolve_budget(
    h: &UncertainHypergraph,
    risk_bound: Option<f64>,
    normalized: Option<f64>,
    measure: RiskMeasure,
) -> Result<f64, CliError> {
    match (risk_bound, normalized) {
        (Some(b), None) => {
            if !b.is_finite() || b < 0.0 {
                return Err(CliError::Usage(format!(
                    "--risk-bound must be a non-negative finite number, got {b}"
                )));
            }
            Ok(b)
        }
        (None, Some(bn)) => {
            if !(0.0..=1.0).contains(&bn) {
                return Err(CliError::Usage(format!(
                    "--normalized-risk must lie in [0, 1], got {bn}"
                )));
            }
            Ok(bn * compute_b_max(h, measure))
        }
        _ => Err(CliError::Usage(
            "pass exactly one of --risk-bound and --normalized-risk".to_string(),
        )),
    }
}

fn run_solver(
    h: &UncertainHypergraph,
    b: f64,
    measure: RiskMeasure,
    matcher: MatcherChoice,
) -> Result<SolveOutcome, CliError> {
    solve_brmwm(h, b, measure, matcher.engine())
        .map_err(|e| CliError::Data(e.to_string()))
}

pub fn cmd_solve(args: &SolveArgs) -> Result<(), CliError> {
    let measure = parse_measure(&args.measure)?;
    let h = load_hypergraph(&args.input)?;
    let b = resolve_budget(&h, args.risk_bound, args.normalized_risk, measure)?;
    let out = run_solver(&h, b, measure, args.matcher)?;

    let ids: Vec<usize> = out.matching.edge_ids().collect();
    let id_list = ids.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
    println!("matching: {id_list}");
    println!("reward: {}", out.reward);
    println!("risk: {}", out.risk);
    match out.ell_star {
        Some(l) => println!("ell_star: {l}"),
        None => println!("ell_star: none"),
    }
    println!("fallback: {}", out.fallback_used);
    println!("matcher_calls: {}", out.matcher_calls);
    println!("runtime_ms: {:.3}", out.elapsed.as_secs_f64() * 1e3);

    if let Some(path) = &args.output {
        let report = serde_json::json!({
            "edge_ids": ids,
            "reward": out.reward,
            "risk": out.risk,
            "risk_bound": b,
            "ell_star": out.ell_star,
            "fallback_used": out.fallback_used,
            "matcher_calls": out.matcher_calls,
            "runtime_ms": out.elapsed.as_secs_f64() * 1e3,
        });
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        std::fs::write(path, text + "\n")
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

/// One CSV row of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub b_n: f64,
    pub b: f64,
    pub expected_reward: f64,
    pub risk: f64,
    /// Mean probability over the matching's edges; only for graphs
    /// whose edges are all Bernoulli (and empty for empty matchings).
    pub avg_probability: Option<f64>,
    pub num_edges: usize,
    pub ell_star: Option<usize>,
    pub fallback_used: bool,
    pub runtime_ms: Option<f64>,
}

pub const SWEEP_HEADER: &str =
    "b_n,b,expected_reward,risk,avg_probability,num_edges,ell_star,fallback_used,runtime_ms";

fn format_row(row: &SweepRow) -> String {
    let mut s = String::new();
    let _ = write!(s, "{},{},{},{},", row.b_n, row.b, row.expected_reward, row.risk);
    if let Some(p) = row.avg_probability {
        let _ = write!(s, "{p}");
    }
    let _ = write!(s, ",{},", row.num_edges);
    if let Some(l) = row.ell_star {
        let _ = write!(s, "{l}");
    }
    let _ = write!(s, ",{},", row.fallback_used);
    if let Some(ms) = row.runtime_ms {
        let _ = write!(s, "{ms}");
    }
    s
}

/// Runs the grid and writes the CSV; rows come back in grid order no
/// matter how the points were scheduled.
pub fn cmd_sweep(args: &SweepArgs) -> Result<Vec<SweepRow>, CliError> {
    let measure = parse_measure(&args.measure)?;
    if args.grid_steps == 0 {
        return Err(CliError::Usage("--grid-steps must be at least 1".to_string()));
    }
    let h = load_hypergraph(&args.input)?;
    let b_max = compute_b_max(&h, measure);
    let all_bernoulli = h.is_all_bernoulli();
    let grid: Vec<f64> = (0..=args.grid_steps)
        .map(|i| i as f64 / args.grid_steps as f64)
        .collect();

    // Points are independent pure solves; run them in parallel.
    let rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|&b_n| -> Result<SweepRow, CliError> {
            let b = b_n * b_max;
            let started = Instant::now();
            let out = run_solver(&h, b, measure, args.matcher)?;
            let runtime_ms = started.elapsed().as_secs_f64() * 1e3;
            assert!(out.risk <= b, "solver produced infeasible row");
            let avg_probability = if all_bernoulli && !out.matching.is_empty() {
                let total: f64 = out
                    .matching
                    .edge_ids()
                    .map(|id| match h.edge(id).dist {
                        EdgeDistribution::Bernoulli { prob, .. } => prob,
                        _ => unreachable!("all edges are Bernoulli"),
                    })
                    .sum();
                Some(total / out.matching.len() as f64)
            } else {
                None
            };
            Ok(SweepRow {
                b_n,
                b,
                expected_reward: out.reward,
                risk: out.risk,
                avg_probability,
                num_edges: out.matching.len(),
                ell_star: out.ell_star,
                fallback_used: out.fallback_used,
                runtime_ms: (!args.omit_timing).then_some(runtime_ms),
            })
        })
        .collect::<Result<_, _>>()?;

    let file = File::create(&args.output)
        .map_err(|e| CliError::Data(format!("{}: {e}", args.output.display())))?;
    let mut w = BufWriter::new(file);
    let write_err = |e: std::io::Error| CliError::Data(format!("{}: {e}", args.output.display()));
    writeln!(w, "{SWEEP_HEADER}").map_err(write_err)?;
    for row in &rows {
        writeln!(w, "{}", format_row(row)).map_err(write_err)?;
    }
    w.flush().map_err(write_err)?;
    Ok(rows)
}

#[derive(Clone, Copy, Debug)]
enum SamplerRole {
    Weight,
    Probability,
    Mean,
    Variance,
}

impl SamplerRole {
    fn domain(self) -> Interval {
        match self {
            SamplerRole::Weight => Interval::open(0.0, f64::INFINITY),
            SamplerRole::Probability => Interval::open_closed(0.0, 1.0),
            SamplerRole::Mean => Interval::all(),
            SamplerRole::Variance => Interval::closed_open(0.0, f64::INFINITY),
        }
    }

    fn name(self) -> &'static str {
        match self {
            SamplerRole::Weight => "weight",
            SamplerRole::Probability => "probability",
            SamplerRole::Mean => "mean",
            SamplerRole::Variance => "variance",
        }
    }
}

/// `uniform:LO:HI`, `gauss:MU:SIGMA`, or `const:V`, domain-checked for
/// the role it will fill.
fn parse_sampler(spec: &str, role: SamplerRole) -> Result<Sampler, CliError> {
    Sampler::parse(spec, role.domain())
        .map_err(|msg| CliError::Usage(format!("{} sampler {spec:?}: {msg}", role.name())))
}

pub fn cmd_gen(args: &GenArgs) -> Result<(), CliError> {
    if args.n < 1 {
        return Err(CliError::Usage("--n must be at least 1".to_string()));
    }
    let mut rng = SeededRng::new(args.seed);
    let topology = match args.model {
        ModelChoice::Gnp => {
            let p = args.p.ok_or_else(|| {
                CliError::Usage("--model gnp requires --p".to_string())
            })?;
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::Usage(format!("--p must lie in [0, 1], got {p}")));
            }
            gnp_topology(args.n, p, &mut rng)
        }
        ModelChoice::Ba => {
            let m = args.m_attach.ok_or_else(|| {
                CliError::Usage("--model ba requires --m-attach".to_string())
            })?;
            if !(1..args.n).contains(&m) {
                return Err(CliError::Usage(format!(
                    "--m-attach must lie in [1, n), got {m} with n = {}",
                    args.n
                )));
            }
            ba_topology(args.n, m, &mut rng)
        }
    };
    let h = match args.dist {
        DistChoice::Bernoulli => {
            let ws = parse_sampler(&args.weights, SamplerRole::Weight)?;
            let ps = parse_sampler(&args.probs, SamplerRole::Probability)?;
            attach_bernoulli(&topology, &ws, &ps, &mut rng)
        }
        DistChoice::Gaussian => {
            let ms = parse_sampler(&args.means, SamplerRole::Mean)?;
            let vs = parse_sampler(&args.vars, SamplerRole::Variance)?;
            attach_gaussian(&topology, &ms, &vs, &mut rng)
        }
    };
    let file = File::create(&args.output)
        .map_err(|e| CliError::Data(format!("{}: {e}", args.output.display())))?;
    ingest::write_hypergraph(&h, BufWriter::new(file))
        .map_err(|e| CliError::Data(format!("{}: {e}", args.output.display())))?;
    println!("n: {}", h.node_count());
    println!("edges: {}", h.edge_count());
    Ok(())
}

pub fn cmd_ingest_coauthors(args: &IngestArgs) -> Result<(), CliError> {
    let file = File::open(&args.input)
        .map_err(|e| CliError::Data(format!("{}: {e}", args.input.display())))?;
    let records = ingest::parse_publication_records(BufReader::new(file))
        .map_err(|e| CliError::Data(format!("{}: {e}", args.input.display())))?;
    let built = ingest::build_coauthor_hypergraph(&records);

    let out = File::create(&args.output)
        .map_err(|e| CliError::Data(format!("{}: {e}", args.output.display())))?;
    ingest::write_hypergraph(&built.hypergraph, BufWriter::new(out))
        .map_err(|e| CliError::Data(format!("{}: {e}", args.output.display())))?;

    let authors_path = args
        .authors_output
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{}.authors", args.output.display())));
    let mut names = String::new();
    for a in &built.authors {
        names.push_str(a);
        names.push('\n');
    }
    std::fs::write(&authors_path, names)
        .map_err(|e| CliError::Data(format!("{}: {e}", authors_path.display())))?;

    println!("records: {}", records.len());
    println!("authors: {}", built.hypergraph.node_count());
    println!("edges: {}", built.hypergraph.edge_count());
    println!("rank: {}", built.hypergraph.rank());
    Ok(())
}

pub fn cmd_oracle(args: &OracleArgs) -> Result<(), CliError> {
    let measure = parse_measure(&args.measure)?;
    let h = load_hypergraph(&args.input)?;
    let budget = EnumerationBudget { max_edges: args.max_edges, ..EnumerationBudget::default() };
    let (matching, reward, risk) = match (args.risk_bound, args.normalized_risk) {
        (None, None) => {
            let (m, r) = brute_force_max_matching(&h, budget)
                .map_err(|e| CliError::Data(e.to_string()))?;
            let risk = h.matching_risk(&m, measure);
            (m, r, risk)
        }
        (rb, nr) => {
            let b = resolve_budget(&h, rb, nr, measure)?;
            let (m, r) = brute_force_brmwm(&h, b, measure, budget)
                .map_err(|e| CliError::Data(e.to_string()))?;
            let risk = h.matching_risk(&m, measure);
            (m, r, risk)
        }
    };
    let ids = matching.edge_ids().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
    println!("opt_reward: {reward}");
    println!("matching: {ids}");
    println!("risk: {risk}");
    Ok(())
}
