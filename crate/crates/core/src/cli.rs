//! The `motifcc` command line.
//!
//! Every subcommand builds a [`RunReport`]. With `--json` the report is
//! printed as JSON, otherwise as plain text (TSV for `bounds`). Vertices are
//! always shown with the labels of the input file.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::anneal::{
    self, best_community_agreement, communities_of, default_weights, AcceptScale, AnnealParams,
    FeatureAssignment, InitRule,
};
use crate::bounds::{alon_bound, bounds_table, ecc_bound, etcc_bound, random_cover};
use crate::error::{Error, Result};
use crate::graph::{enumerate_triangles, parse_edge_list, EdgeListOptions, Graph};
use crate::instance::{
    build_instance, mmcc_cost_terms, partition_agreement, NonedgeConvention, NonedgeWeight,
    Partition, WeightConfig,
};
use crate::mmcc::{
    build_lp, export_lp, import_solution, round_and_score, solve_lp, LpBackend, LpFormat,
    PivotRule, RoundingParams,
};
use crate::oracles::{exact_best_assignment, exact_ecc, exact_etcc, exact_mmcc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;
pub const EXIT_GUARD: i32 = 4;
pub const EXIT_SOLVER: i32 = 5;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::SelfLoop { .. } | Error::Json(_) => EXIT_PARSE,
        Error::Config(_) | Error::Io(_) => EXIT_CONFIG,
        Error::ResourceGuard(_) => EXIT_GUARD,
        Error::Solver(_) => EXIT_SOLVER,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "motifcc",
    version,
    about = "Motif correlation clustering and edge-triangle clique covers"
)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print the full JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Vertex ids in the input start at 1.
    #[arg(long, global = true)]
    pub one_based: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Record wall-clock time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cluster through the LP relaxation and rounding.
    Mmcc(MmccArgs),
    /// Overlapping communities by simulated annealing.
    Anneal(AnnealArgs),
    /// Cover-number bounds as a TSV table.
    Bounds(BoundsArgs),
    /// Exhaustive optimum for a small graph.
    Exact(ExactArgs),
    /// Score a given partition or feature assignment.
    Eval(EvalArgs),
    /// Randomized edge-triangle clique cover.
    Randcover(RandcoverArgs),
    /// List the triangles of a graph.
    Triangles(GraphArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct GraphArgs {
    /// Edge list, one `u v` pair per line.
    pub input: PathBuf,
    /// Vertex count, when larger than the highest id in the file.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
pub struct WeightArgs {
    /// Similarity weight of edges.
    #[arg(long, default_value_t = 1.0)]
    pub edge_sim: f64,
    /// Fixed nonedge value.
    #[arg(long, conflicts_with_all = ["nonedge_dissim_coeff", "nonedge_dissim_range"])]
    pub nonedge_dissim: Option<f64>,
    /// Nonedge value `1/2 - coeff * density`.
    #[arg(long, default_value_t = 0.0)]
    pub nonedge_dissim_coeff: f64,
    /// Per-nonedge value drawn uniformly between `1/2 - HI * density` and
    /// `1/2 - LO * density`.
    #[arg(long, value_name = "LO,HI", value_delimiter = ',')]
    pub nonedge_dissim_range: Option<Vec<f64>>,
    /// Whether the nonedge value is the cost of splitting or of joining.
    #[arg(long, value_enum, default_value_t = NonedgeConvention::SplitCost)]
    pub nonedge_convention: NonedgeConvention,
    /// Similarity weight of triangles.
    #[arg(long, default_value_t = 1.0)]
    pub tri_sim: f64,
    /// Similarity weight of non-triangle triples.
    #[arg(long, default_value_t = 0.5)]
    pub nontri_sim: f64,
    /// Relevance of triple terms.
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    /// Relevance of pair terms.
    #[arg(long, default_value_t = 1.0)]
    pub lambda_pair: f64,
    /// Allow more vertices than the dense-instance limit.
    #[arg(long)]
    pub force: bool,
}

impl WeightArgs {
    fn config(&self, seed: u64) -> Result<WeightConfig> {
        let nonedge = match (&self.nonedge_dissim, self.nonedge_dissim_range.as_deref()) {
            (Some(value), _) => NonedgeWeight::Absolute { value: *value },
            (None, Some(&[lo_coeff, hi_coeff])) => NonedgeWeight::UniformDensityRange {
                lo_coeff,
                hi_coeff,
                seed,
            },
            (None, Some(_)) => {
                return Err(Error::config("--nonedge-dissim-range takes exactly LO,HI"))
            }
            (None, None) => NonedgeWeight::DensityOffset {
                coeff: self.nonedge_dissim_coeff,
            },
        };
        Ok(WeightConfig {
            edge_sim: self.edge_sim,
            nonedge,
            nonedge_convention: self.nonedge_convention,
            triangle_sim: self.tri_sim,
            nontriangle_sim: self.nontri_sim,
            lambda1: self.lambda_pair,
            lambda2: self.lambda,
            force: self.force,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PivotArg {
    Ascending,
    Random,
}

#[derive(Debug, Args, Serialize)]
pub struct MmccArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub weights: WeightArgs,
    /// Ball radius of the rounding.
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub alpha: f64,
    /// Spread threshold factor of the rounding.
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub beta: f64,
    /// Pivot order; `random` draws from `--seed`.
    #[arg(long, value_enum, default_value_t = PivotArg::Ascending)]
    pub pivot: PivotArg,
    #[arg(long, value_enum, default_value_t = LpBackend::Auto)]
    pub lp_solver: LpBackend,
    /// Write the relaxation to this file.
    #[arg(long, value_name = "PATH")]
    pub export_lp: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = LpFormat::Lp)]
    pub export_format: LpFormat,
    /// Stop after writing the relaxation.
    #[arg(long, requires = "export_lp")]
    pub export_only: bool,
    /// Round this `name value` solution instead of solving.
    #[arg(long, value_name = "PATH")]
    pub lp_solution: Option<PathBuf>,
    /// Ground-truth clusters (JSON array of label arrays) to score against.
    #[arg(long, value_name = "PATH")]
    pub ground_truth: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct AnnealArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Number of features.
    #[arg(long, short = 'm', default_value_t = 2)]
    pub m: usize,
    /// Inverse temperature (default: M).
    #[arg(long)]
    pub mu: Option<f64>,
    /// Rounds per chain (default: ceil(rounds_factor * n * ln n)).
    #[arg(long)]
    pub rounds: Option<usize>,
    #[arg(long, default_value_t = 20.0)]
    pub rounds_factor: f64,
    /// Independent chains; the best is reported.
    #[arg(long, default_value_t = 1)]
    pub restarts: usize,
    #[arg(long, value_enum, default_value_t = InitRule::Empty)]
    pub init: InitRule,
    /// Score change that enters the acceptance probability.
    #[arg(long, value_enum, default_value_t = AcceptScale::Raw)]
    pub accept: AcceptScale,
    /// Same as `--accept raw`.
    #[arg(long, conflicts_with = "accept")]
    pub raw_score_accept: bool,
    /// Ground-truth communities (JSON array of label arrays) to score against.
    #[arg(long, value_name = "PATH")]
    pub ground_truth: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsArgs {
    /// Vertex counts.
    #[arg(long, required = true, value_delimiter = ',', num_args = 1..)]
    pub n: Vec<u64>,
    /// Degree deficit for the high-minimum-degree bound.
    #[arg(long, default_value_t = 1)]
    pub d: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExactWhat {
    Mmcc,
    Etcc,
    Ecc,
    Assign,
}

#[derive(Debug, Args, Serialize)]
pub struct ExactArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum)]
    pub what: ExactWhat,
    #[command(flatten)]
    pub weights: WeightArgs,
    /// Number of features for `--what assign`.
    #[arg(long, short = 'm', default_value_t = 2)]
    pub m: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct EvalArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// JSON array of clusters, each an array of vertex labels.
    #[arg(
        long,
        value_name = "PATH",
        required_unless_present = "assignment",
        conflicts_with = "assignment"
    )]
    pub partition: Option<PathBuf>,
    /// JSON array of communities; community `k` (from 1) is feature `k`.
    #[arg(long, value_name = "PATH")]
    pub assignment: Option<PathBuf>,
    /// Number of features (default: number of communities).
    #[arg(long, short = 'm')]
    pub m: Option<usize>,
    #[command(flatten)]
    pub weights: WeightArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct RandcoverArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Every vertex is assumed to have degree at least `n - d`.
    #[arg(long, default_value_t = 1)]
    pub d: u64,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
}

#[derive(Debug, Serialize)]
pub struct InputInfo {
    pub path: String,
    pub sha256: String,
    pub n: usize,
    pub edges: usize,
}

/// Everything needed to replay a run and its results.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub seed: u64,
    pub input: Option<InputInfo>,
    pub parameters: Value,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_seconds: Option<f64>,
    #[serde(skip)]
    text: String,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn text(&self) -> &str {
        &self.text
    }
}

struct LoadedGraph {
    graph: Graph,
    info: InputInfo,
}

fn load_graph(args: &GraphArgs, one_based: bool) -> Result<LoadedGraph> {
    let bytes = fs::read(&args.input)
        .map_err(|e| Error::config(format!("cannot read {}: {e}", args.input.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::Parse {
        line: 0,
        msg: "input is not UTF-8".into(),
    })?;
    let graph = parse_edge_list(
        &text,
        &EdgeListOptions {
            one_based,
            n: args.n,
        },
    )?;
    let info = InputInfo {
        path: args.input.display().to_string(),
        sha256: hex(&Sha256::digest(&bytes)),
        n: graph.n(),
        edges: graph.edge_count(),
    };
    Ok(LoadedGraph { graph, info })
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

/// A JSON array of arrays of vertex labels, mapped to vertex indices.
pub fn read_label_sets(g: &Graph, path: &Path) -> Result<Vec<Vec<usize>>> {
    let sets: Vec<Vec<usize>> = serde_json::from_value(read_json(path)?)?;
    sets.iter()
        .map(|s| {
            s.iter()
                .map(|&l| {
                    g.vertex_of_label(l).ok_or_else(|| {
                        Error::config(format!("{}: unknown vertex label {l}", path.display()))
                    })
                })
                .collect()
        })
        .collect()
}

fn labeled(g: &Graph, vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|&v| g.label(v)).collect()
}

fn labeled_sets(g: &Graph, sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| labeled(g, s)).collect()
}

fn fmt_set(g: &Graph, s: &[usize]) -> String {
    let labels: Vec<String> = s.iter().map(|&v| g.label(v).to_string()).collect();
    format!("{{{}}}", labels.join(" "))
}

fn assignment_json(g: &Graph, a: &FeatureAssignment) -> Value {
    (0..g.n())
        .map(|v| json!({ "vertex": g.label(v), "features": a.features(v) }))
        .collect()
}

/// Parse `args` (including the program name), run, and write the output.
/// Returns the process exit code.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match run(&cli).and_then(|report| emit(&cli, &report)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(cli: &Cli, report: &RunReport) -> Result<()> {
    let out = if cli.json {
        report.to_json()
    } else {
        report.text().to_string()
    };
    match &cli.output {
        Some(path) => fs::write(path, out)?,
        None => std::io::stdout().write_all(out.as_bytes())?,
    }
    Ok(())
}

/// Execute the parsed command.
pub fn run(cli: &Cli) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Mmcc(a) => cmd_mmcc(cli, a),
        Command::Anneal(a) => cmd_anneal(cli, a),
        Command::Bounds(a) => cmd_bounds(cli, a),
        Command::Exact(a) => cmd_exact(cli, a),
        Command::Eval(a) => cmd_eval(cli, a),
        Command::Randcover(a) => cmd_randcover(cli, a),
        Command::Triangles(a) => cmd_triangles(cli, a),
    }?;
    if cli.timing {
        report.wall_clock_seconds = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

fn report(
    cli: &Cli,
    command: &str,
    input: Option<InputInfo>,
    parameters: &impl Serialize,
    results: Value,
    text: String,
) -> Result<RunReport> {
    let mut parameters = serde_json::to_value(parameters)?;
    if let Value::Object(map) = &mut parameters {
        map.insert("one_based".into(), json!(cli.one_based));
    }
    Ok(RunReport {
        command: command.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        seed: cli.seed,
        input,
        parameters,
        results,
        wall_clock_seconds: None,
        text,
    })
}

pub fn cmd_mmcc(cli: &Cli, a: &MmccArgs) -> Result<RunReport> {
    let LoadedGraph { graph: g, info } = load_graph(&a.graph, cli.one_based)?;
    let cfg = a.weights.config(cli.seed)?;
    let pivot = match a.pivot {
        PivotArg::Ascending => PivotRule::Ascending,
        PivotArg::Random => PivotRule::Random { seed: cli.seed },
    };
    let params = RoundingParams {
        alpha: a.alpha,
        beta: a.beta,
        pivot,
    };
    params.validate()?;
    let truth = a
        .ground_truth
        .as_deref()
        .map(|p| read_label_sets(&g, p))
        .transpose()?;
    let inst = build_instance(&g, &cfg)?;
    let model = build_lp(&inst);

    let mut text = String::new();
    if let Some(path) = &a.export_lp {
        fs::write(path, export_lp(&model, a.export_format))?;
        text += &format!("wrote relaxation to {}\n", path.display());
        if a.export_only {
            let results = json!({
                "exported": path.display().to_string(),
                "format": a.export_format,
                "variables": model.num_vars(),
                "rows": model.rows.len(),
                "objective_offset": model.cost_offset,
            });
            return report(cli, "mmcc", Some(info), a, results, text);
        }
    }
    let (sol, backend) = match &a.lp_solution {
        Some(path) => {
            let body = fs::read_to_string(path)
                .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
            (import_solution(&model, &body)?, "imported".to_string())
        }
        None => {
            let backend = a.lp_solver.resolve(g.n());
            (
                solve_lp(&model, backend)?,
                format!("{backend:?}").to_lowercase(),
            )
        }
    };
    let out = round_and_score(&inst, &sol, &params)?;
    let clusters = out.partition.clusters();
    let (pair_cost, triple_cost) = mmcc_cost_terms(&inst, &out.partition);
    let agreement = truth
        .as_ref()
        .map(|t| partition_agreement(&out.partition, t));

    text += &format!("clusters: {}\n", clusters.len());
    for c in &clusters {
        text += &format!("  {}\n", fmt_set(&g, c));
    }
    text += &format!(
        "lp_objective: {}\nrounded_cost: {}\nratio: {}\n",
        out.lp_objective,
        out.rounded_cost,
        out.ratio()
    );
    if let Some(k) = agreement {
        text += &format!("agreement: {k}/{}\n", g.n());
    }
    let results = json!({
        "clusters": labeled_sets(&g, &clusters),
        "num_clusters": clusters.len(),
        "lp_objective": out.lp_objective,
        "rounded_cost": out.rounded_cost,
        "pair_disagreement": pair_cost,
        "triple_disagreement": triple_cost,
        "ratio": out.ratio(),
        "guarantee": params.guarantee(),
        "lp_backend": backend,
        "agreement": agreement,
    });
    report(cli, "mmcc", Some(info), a, results, text)
}

pub fn cmd_anneal(cli: &Cli, a: &AnnealArgs) -> Result<RunReport> {
    let LoadedGraph { graph: g, info } = load_graph(&a.graph, cli.one_based)?;
    let truth = a
        .ground_truth
        .as_deref()
        .map(|p| read_label_sets(&g, p))
        .transpose()?;
    let params = AnnealParams {
        m: a.m,
        mu: a.mu,
        rounds: a.rounds,
        rounds_factor: a.rounds_factor,
        seed: cli.seed,
        restarts: a.restarts,
        init: a.init,
        accept: if a.raw_score_accept {
            AcceptScale::Raw
        } else {
            a.accept
        },
    };
    let w = default_weights(&g);
    let out = anneal::anneal(&g, &params, &w)?;
    let communities = communities_of(&out.assignment);
    let agreement = truth
        .as_ref()
        .map(|t| best_community_agreement(g.n(), &communities, t));

    let mut text = format!(
        "score: {}\nnormalized_score: {}\ncommunities: {}\n",
        out.score,
        out.normalized_score,
        communities.len()
    );
    for c in &communities {
        text += &format!("  {}\n", fmt_set(&g, c));
    }
    if let Some(k) = &agreement {
        text += &format!("agreement per truth class: {k:?} of {}\n", g.n());
    }
    let results = json!({
        "M": a.m,
        "score": out.score,
        "normalized_score": out.normalized_score,
        "assignment": assignment_json(&g, &out.assignment),
        "communities": labeled_sets(&g, &communities),
        "seed": out.seed,
        "rounds": out.rounds,
        "mu": params.mu(),
        "weights": w,
        "agreement": agreement,
    });
    report(cli, "anneal", Some(info), a, results, text)
}

pub fn cmd_bounds(cli: &Cli, a: &BoundsArgs) -> Result<RunReport> {
    if a.d == 0 {
        return Err(Error::config("d must be >= 1"));
    }
    let rows: Vec<Value> =
        a.n.iter()
            .map(|&n| {
                json!({
                    "n": n,
                    "ecc_bound": ecc_bound(n),
                    "etcc_bound": etcc_bound(n),
                    "alon_bound": alon_bound(n, a.d),
                })
            })
            .collect();
    report(
        cli,
        "bounds",
        None,
        a,
        json!({ "d": a.d, "rows": rows }),
        bounds_table(&a.n, a.d),
    )
}

pub fn cmd_exact(cli: &Cli, a: &ExactArgs) -> Result<RunReport> {
    let LoadedGraph { graph: g, info } = load_graph(&a.graph, cli.one_based)?;
    let (results, text) = match a.what {
        ExactWhat::Mmcc => {
            let inst = build_instance(&g, &a.weights.config(cli.seed)?)?;
            let r = exact_mmcc(&inst)?;
            let clusters = r.witness.clusters();
            let mut text = format!("optimum: {}\nclusters: {}\n", r.optimum, clusters.len());
            for c in &clusters {
                text += &format!("  {}\n", fmt_set(&g, c));
            }
            (
                json!({ "what": "mmcc", "optimum": r.optimum, "witness": labeled_sets(&g, &clusters) }),
                text,
            )
        }
        ExactWhat::Etcc | ExactWhat::Ecc => {
            let r = if a.what == ExactWhat::Etcc {
                exact_etcc(&g)?
            } else {
                exact_ecc(&g)?
            };
            let mut text = format!("optimum: {}\n", r.optimum);
            for c in &r.witness {
                text += &format!("  {}\n", fmt_set(&g, c));
            }
            (
                json!({ "what": a.what, "optimum": r.optimum, "witness": labeled_sets(&g, &r.witness) }),
                text,
            )
        }
        ExactWhat::Assign => {
            let w = default_weights(&g);
            let (asg, score) = exact_best_assignment(&g, a.m, &w)?;
            let normalized = anneal::normalized_score(&g, &asg, &w);
            let communities = communities_of(&asg);
            let mut text = format!("score: {score}\nnormalized_score: {normalized}\n");
            for c in &communities {
                text += &format!("  {}\n", fmt_set(&g, c));
            }
            (
                json!({
                    "what": "assign",
                    "M": a.m,
                    "optimum": score,
                    "normalized_score": normalized,
                    "assignment": assignment_json(&g, &asg),
                    "communities": labeled_sets(&g, &communities),
                }),
                text,
            )
        }
    };
    report(cli, "exact", Some(info), a, results, text)
}

pub fn cmd_eval(cli: &Cli, a: &EvalArgs) -> Result<RunReport> {
    let LoadedGraph { graph: g, info } = load_graph(&a.graph, cli.one_based)?;
    let (results, text) = if let Some(path) = &a.partition {
        let clusters = read_label_sets(&g, path)?;
        let p = Partition::from_clusters(g.n(), &clusters)?;
        let inst = build_instance(&g, &a.weights.config(cli.seed)?)?;
        let (pair, triple) = mmcc_cost_terms(&inst, &p);
        let cost = inst.lambda1 * pair + inst.lambda2 * triple;
        (
            json!({
                "kind": "partition",
                "cost": cost,
                "pair_disagreement": pair,
                "triple_disagreement": triple,
                "num_clusters": p.num_clusters(),
            }),
            format!("cost: {cost}\n"),
        )
    } else {
        let path = a.assignment.as_ref().expect("clap enforces one of the two");
        let communities = read_label_sets(&g, path)?;
        let m = a.m.unwrap_or(communities.len().max(1));
        if communities.len() > m {
            return Err(Error::config(format!(
                "{} communities exceed M = {m}",
                communities.len()
            )));
        }
        let mut sets = vec![Vec::new(); g.n()];
        for (k, c) in communities.iter().enumerate() {
            for &v in c {
                sets[v].push(k + 1);
            }
        }
        let asg = FeatureAssignment::from_sets(m, &sets)?;
        let w = default_weights(&g);
        let score = anneal::score(&g, &asg, &w);
        let normalized = anneal::normalized_score(&g, &asg, &w);
        (
            json!({
                "kind": "assignment",
                "M": m,
                "score": score,
                "normalized_score": normalized,
                "exact_representation": anneal::is_intersection_representation(&g, &asg),
            }),
            format!("score: {score}\nnormalized_score: {normalized}\n"),
        )
    };
    report(cli, "eval", Some(info), a, results, text)
}

pub fn cmd_randcover(cli: &Cli, a: &RandcoverArgs) -> Result<RunReport> {
    let LoadedGraph { graph: g, info } = load_graph(&a.graph, cli.one_based)?;
    let r = random_cover(&g, a.d, cli.seed, a.trials)?;
    let text = format!(
        "covered_all: {}\nsize: {}\nbound_used: {}\ntrials_used: {}\nuncovered: {}\n",
        r.covered_all, r.size, r.bound_used, r.trials_used, r.uncovered
    );
    let results = json!({
        "covered_all": r.covered_all,
        "size": r.size,
        "bound_used": r.bound_used,
        "trials_used": r.trials_used,
        "uncovered": r.uncovered,
        "min_degree": g.min_degree(),
        "cliques": labeled_sets(&g, &r.cliques),
    });
    report(cli, "randcover", Some(info), a, results, text)
}

pub fn cmd_triangles(cli: &Cli, a: &GraphArgs) -> Result<RunReport> {
    let LoadedGraph { graph: g, info } = load_graph(a, cli.one_based)?;
    let tris: Vec<Vec<usize>> = enumerate_triangles(&g)
        .iter()
        .map(|t| labeled(&g, &t.0))
        .collect();
    let mut text = String::new();
    for t in &tris {
        text += &format!("{}\t{}\t{}\n", t[0], t[1], t[2]);
    }
    let results = json!({ "count": tris.len(), "triangles": tris });
    report(cli, "triangles", Some(info), a, results, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("motifcc").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn parses_global_flags_anywhere() {
        let cli = parse(&["mmcc", "g.edges", "--seed", "4", "--json", "--one-based"]);
        assert_eq!(cli.seed, 4);
        assert!(cli.json && cli.one_based);
        let cli = parse(&["--json", "bounds", "--n", "7,8,9"]);
        let Command::Bounds(b) = cli.command else {
            panic!()
        };
        assert_eq!(b.n, vec![7, 8, 9]);
    }

    #[test]
    fn weight_flags_map_to_config() {
        let cli = parse(&[
            "mmcc",
            "g",
            "--nonedge-dissim-coeff",
            "0.2",
            "--lambda",
            "3",
        ]);
        let Command::Mmcc(a) = cli.command else {
            panic!()
        };
        let cfg = a.weights.config(0).unwrap();
        assert_eq!(cfg.nonedge, NonedgeWeight::DensityOffset { coeff: 0.2 });
        assert_eq!((cfg.lambda1, cfg.lambda2), (1.0, 3.0));

        let cli = parse(&["mmcc", "g", "--nonedge-dissim-range", "0.1,0.3"]);
        let Command::Mmcc(a) = cli.command else {
            panic!()
        };
        assert!(matches!(
            a.weights.config(9).unwrap().nonedge,
            NonedgeWeight::UniformDensityRange { lo_coeff, hi_coeff, seed: 9 } if lo_coeff == 0.1 && hi_coeff == 0.3
        ));
        assert!(Cli::try_parse_from([
            "motifcc",
            "mmcc",
            "g",
            "--nonedge-dissim",
            "0.4",
            "--nonedge-dissim-coeff",
            "1"
        ])
        .is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            exit_code(&Error::Parse {
                line: 1,
                msg: String::new()
            }),
            2
        );
        assert_eq!(exit_code(&Error::config("x")), 3);
        assert_eq!(exit_code(&Error::guard("x")), 4);
        assert_eq!(exit_code(&Error::Solver("x".into())), 5);
    }
}
