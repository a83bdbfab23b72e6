//! Command-line front end.
//!
//! Subcommands: `gen` (toy datasets), `graph` (points → edge list),
//! `cluster` (points or edge list → labels + JSON report), `diagnose`
//! (model-selection report + eigenvalue table), `bench` (relaxation-gap
//! comparison on enumerable graphs) and `commute` (pairwise commute
//! distances).
//!
//! Exit codes: 0 on success, 1 on usage errors (bad flags, unreadable
//! input), 2 on computational errors (isolated vertex, disconnected
//! graph where connectivity is required, oversized enumeration). Exit-2
//! errors print a structured JSON message to stderr.

mod svg;

use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cuts::{evaluate_cuts, relaxation_gap_report, CutObjective};
use crate::data::{
    gen_cockroach_graph, gen_gaussian_mixture_1d, gen_moons_and_gaussian, points_to_csv,
    read_points_csv, PointSet,
};
use crate::diagnostics::{
    build_report, check_unnormalized_reliability, suggest_epsilon_mst, suggest_knn_k, suggest_sigma,
};
use crate::eigen::eig_symmetric;
use crate::error::{Error, Result};
use crate::graph::{build_eps_graph, build_full_graph, build_knn_graph, SimilarityGraph};
use crate::laplacian::{build_laplacian, to_sym_equivalent, LaplacianKind};
use crate::similarity::{euclidean_distances, gaussian_similarity, DistanceMatrix};
use crate::spectral::{cluster, embed, SpectralConfig};

#[derive(Parser)]
#[command(
    name = "speclust",
    version,
    about = "Spectral clustering toolkit",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate toy datasets (Gaussian mixture, moons, cockroach graph)
    Gen(GenArgs),
    /// Build a similarity graph from a points CSV
    Graph(GraphArgs),
    /// Cluster points or a saved graph
    Cluster(ClusterArgs),
    /// Eigengap and reliability diagnostics
    Diagnose(DiagnoseArgs),
    /// Compare a spectral partition against the exact bipartition oracle
    Bench(BenchArgs),
    /// Pairwise commute distances of a connected graph
    Commute(CommuteArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Dataset {
    Gaussians,
    Moons,
    Cockroach,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphType {
    Eps,
    Knn,
    Full,
}

fn parse_laplacian(s: &str) -> std::result::Result<LaplacianKind, String> {
    LaplacianKind::from_str(s).map_err(|e| e.to_string())
}

fn parse_objective(s: &str) -> std::result::Result<CutObjective, String> {
    match CutObjective::from_str(s) {
        Ok(CutObjective::Cut) => Err("bench compares relaxations; use ratiocut or ncut".into()),
        Ok(obj) => Ok(obj),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    dataset: Dataset,
    /// Sample size (gaussians)
    #[arg(long, default_value_t = 200)]
    n: usize,
    /// Comma-separated component means (gaussians)
    #[arg(long, default_value = "0,4,8,12")]
    means: String,
    /// Component standard deviation (gaussians)
    #[arg(long, default_value_t = 0.5)]
    std: f64,
    /// Comma-separated sizes top-moon,bottom-moon,blob (moons)
    #[arg(long, default_value = "100,150,50")]
    counts: String,
    /// Coordinate jitter (moons)
    #[arg(long, default_value_t = 0.05)]
    noise: f64,
    /// Ladder parameter, 4k vertices (cockroach)
    #[arg(long, default_value_t = 4)]
    cockroach_k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Points CSV (gaussians, moons) or edge list (cockroach)
    #[arg(long)]
    out: PathBuf,
    /// Ground-truth labels CSV (gaussians, moons)
    #[arg(long)]
    labels_out: Option<PathBuf>,
}

/// Input selection and graph construction flags shared by the
/// graph-consuming subcommands.
#[derive(Args, Clone)]
struct GraphOpts {
    /// Points CSV input
    #[arg(long)]
    input: Option<PathBuf>,
    /// Saved edge-list input (skips graph construction)
    #[arg(long)]
    load_graph: Option<PathBuf>,
    /// Similarity graph type for point inputs
    #[arg(long, value_enum)]
    graph: Option<GraphType>,
    /// Neighborhood radius; required for --graph eps
    #[arg(long)]
    eps: Option<f64>,
    /// Neighbor count for kNN graphs (default: ceil(ln n))
    #[arg(long)]
    knn_k: Option<usize>,
    /// Mutual (intersection) kNN graph instead of the union one
    #[arg(long)]
    mutual: bool,
    /// Gaussian kernel width (default: mean k-th neighbor distance)
    #[arg(long)]
    sigma: Option<f64>,
}

#[derive(Serialize)]
struct GraphDescription {
    source: &'static str,
    #[serde(rename = "type")]
    graph_type: Option<&'static str>,
    eps: Option<f64>,
    knn_k: Option<usize>,
    mutual: Option<bool>,
    sigma: Option<f64>,
}

struct LoadedInput {
    graph: SimilarityGraph,
    points: Option<PointSet>,
    description: GraphDescription,
}

impl GraphOpts {
    fn validate(&self) -> Result<()> {
        match (&self.input, &self.load_graph) {
            (None, None) => {
                return Err(Error::InvalidParameter(
                    "either --input or --load-graph is required".into(),
                ))
            }
            (Some(_), Some(_)) => {
                return Err(Error::InvalidParameter(
                    "--input and --load-graph are mutually exclusive".into(),
                ))
            }
            _ => {}
        }
        if self.load_graph.is_some() {
            if self.graph.is_some()
                || self.eps.is_some()
                || self.knn_k.is_some()
                || self.mutual
                || self.sigma.is_some()
            {
                return Err(Error::InvalidParameter(
                    "graph construction flags require --input, not --load-graph".into(),
                ));
            }
            return Ok(());
        }
        let graph_type = self.graph.unwrap_or(GraphType::Knn);
        match graph_type {
            GraphType::Eps => {
                if self.eps.is_none() {
                    return Err(Error::InvalidParameter(
                        "--eps is required with --graph eps".into(),
                    ));
                }
                if self.knn_k.is_some() || self.mutual || self.sigma.is_some() {
                    return Err(Error::InvalidParameter(
                        "--knn-k/--mutual/--sigma do not apply to --graph eps".into(),
                    ));
                }
            }
            GraphType::Knn => {
                if self.eps.is_some() {
                    return Err(Error::InvalidParameter(
                        "--eps applies to --graph eps only".into(),
                    ));
                }
            }
            GraphType::Full => {
                if self.eps.is_some() || self.knn_k.is_some() || self.mutual {
                    return Err(Error::InvalidParameter(
                        "--eps/--knn-k/--mutual do not apply to --graph full".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn load(&self) -> Result<LoadedInput> {
        self.validate()?;
        if let Some(path) = &self.load_graph {
            let graph = SimilarityGraph::load_edge_list(path)?;
            return Ok(LoadedInput {
                graph,
                points: None,
                description: GraphDescription {
                    source: "edge-list",
                    graph_type: None,
                    eps: None,
                    knn_k: None,
                    mutual: None,
                    sigma: None,
                },
            });
        }
        let points = read_points_csv(self.input.as_ref().expect("validated"))?;
        let distances = euclidean_distances(&points);
        let graph_type = self.graph.unwrap_or(GraphType::Knn);
        let (graph, description) = build_from_points(
            &points,
            &distances,
            graph_type,
            self.eps,
            self.knn_k,
            self.mutual,
            self.sigma,
        )?;
        Ok(LoadedInput {
            graph,
            points: Some(points),
            description,
        })
    }
}

fn build_from_points(
    points: &PointSet,
    distances: &DistanceMatrix,
    graph_type: GraphType,
    eps: Option<f64>,
    knn_k: Option<usize>,
    mutual: bool,
    sigma: Option<f64>,
) -> Result<(SimilarityGraph, GraphDescription)> {
    match graph_type {
        GraphType::Eps => {
            let eps = eps.expect("validated");
            let graph = build_eps_graph(distances, eps)?;
            Ok((
                graph,
                GraphDescription {
                    source: "points",
                    graph_type: Some("eps"),
                    eps: Some(eps),
                    knn_k: None,
                    mutual: None,
                    sigma: None,
                },
            ))
        }
        GraphType::Knn => {
            let k = knn_k.unwrap_or_else(|| suggest_knn_k(points.len()));
            let sigma = match sigma {
                Some(s) => s,
                None => suggest_sigma(distances)?,
            };
            let similarities = gaussian_similarity(points, sigma)?;
            let graph = build_knn_graph(distances, &similarities, k, mutual)?;
            Ok((
                graph,
                GraphDescription {
                    source: "points",
                    graph_type: Some("knn"),
                    eps: None,
                    knn_k: Some(k),
                    mutual: Some(mutual),
                    sigma: Some(sigma),
                },
            ))
        }
        GraphType::Full => {
            let sigma = match sigma {
                Some(s) => s,
                None => suggest_sigma(distances)?,
            };
            let similarities = gaussian_similarity(points, sigma)?;
            let graph = build_full_graph(&similarities)?;
            Ok((
                graph,
                GraphDescription {
                    source: "points",
                    graph_type: Some("full"),
                    eps: None,
                    knn_k: None,
                    mutual: None,
                    sigma: Some(sigma),
                },
            ))
        }
    }
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    graph: GraphOpts,
    /// Edge-list output
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ClusterArgs {
    #[command(flatten)]
    graph: GraphOpts,
    /// Also save the constructed graph as an edge list
    #[arg(long)]
    save_graph: Option<PathBuf>,
    /// Laplacian: un, sym or rw
    #[arg(long, default_value = "rw", value_parser = parse_laplacian)]
    laplacian: LaplacianKind,
    /// Cluster count (default: eigengap heuristic)
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    restarts: usize,
    #[arg(long, default_value_t = 300)]
    max_iters: usize,
    /// Labels CSV output
    #[arg(long)]
    out: PathBuf,
    /// JSON report path (defaults to stdout)
    #[arg(long)]
    report: Option<PathBuf>,
    /// Emit SVG figures with this path prefix
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct DiagnoseArgs {
    #[command(flatten)]
    graph: GraphOpts,
    /// Laplacian: un, sym or rw
    #[arg(long, default_value = "rw", value_parser = parse_laplacian)]
    laplacian: LaplacianKind,
    /// Largest k considered by the eigengap heuristic
    #[arg(long, default_value_t = 10)]
    k_max: usize,
    /// JSON report path (defaults to stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Eigenvalue table TSV path
    #[arg(long)]
    table: Option<PathBuf>,
    /// Emit SVG figures with this path prefix
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Benchmark the cockroach graph with this ladder parameter
    #[arg(long)]
    cockroach: Option<usize>,
    #[command(flatten)]
    graph: GraphOpts,
    /// Objective: ratiocut or ncut
    #[arg(long, value_parser = parse_objective)]
    objective: CutObjective,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON output path (defaults to stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CommuteArgs {
    #[command(flatten)]
    graph: GraphOpts,
    /// Commute-distance matrix CSV output
    #[arg(long)]
    out: PathBuf,
}

/// Parse argv and run; returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Gen(args) => run_gen(args),
        Command::Graph(args) => run_graph(args),
        Command::Cluster(args) => run_cluster(args),
        Command::Diagnose(args) => run_diagnose(args),
        Command::Bench(args) => run_bench(args),
        Command::Commute(args) => run_commute(args),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) if e.is_computational() => {
            eprintln!(
                "{}",
                serde_json::json!({"error": {"kind": error_kind(&e), "message": e.to_string()}})
            );
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::IsolatedVertex(_) => "isolated-vertex",
        Error::Disconnected => "disconnected",
        Error::InstanceTooLarge { .. } => "instance-too-large",
        Error::UndefinedObjective { .. } => "undefined-objective",
        Error::ZeroEmbeddingRow(_) => "zero-embedding-row",
        _ => "error",
    }
}

fn parse_f64_list(text: &str, what: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|c| {
            c.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidParameter(format!("bad {what} entry {c:?}")))
        })
        .collect()
}

fn run_gen(args: GenArgs) -> Result<()> {
    match args.dataset {
        Dataset::Cockroach => {
            let graph = gen_cockroach_graph(args.cockroach_k)?;
            graph.save_edge_list(&args.out)?;
            if args.labels_out.is_some() {
                return Err(Error::InvalidParameter(
                    "--labels-out does not apply to the cockroach graph".into(),
                ));
            }
            Ok(())
        }
        Dataset::Gaussians => {
            let means = parse_f64_list(&args.means, "means")?;
            let sample = gen_gaussian_mixture_1d(args.n, &means, args.std, args.seed)?;
            write_sample(
                &sample.points,
                &sample.labels,
                &args.out,
                args.labels_out.as_deref(),
            )
        }
        Dataset::Moons => {
            let counts = parse_f64_list(&args.counts, "counts")?;
            if counts.len() != 3 || counts.iter().any(|&c| c.fract() != 0.0 || c < 0.0) {
                return Err(Error::InvalidParameter(
                    "--counts expects three non-negative integers".into(),
                ));
            }
            let sample = gen_moons_and_gaussian(
                (counts[0] as usize, counts[1] as usize, counts[2] as usize),
                args.noise,
                args.seed,
            )?;
            write_sample(
                &sample.points,
                &sample.labels,
                &args.out,
                args.labels_out.as_deref(),
            )
        }
    }
}

fn write_sample(
    points: &PointSet,
    labels: &[usize],
    out: &Path,
    labels_out: Option<&Path>,
) -> Result<()> {
    std::fs::write(out, points_to_csv(points))?;
    if let Some(path) = labels_out {
        let mut text = String::from("index,label\n");
        for (i, &l) in labels.iter().enumerate() {
            text.push_str(&format!("{},{}\n", i + 1, l));
        }
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn run_graph(args: GraphArgs) -> Result<()> {
    if args.graph.load_graph.is_some() {
        return Err(Error::InvalidParameter(
            "the graph subcommand builds from points; use --input".into(),
        ));
    }
    let loaded = args.graph.load()?;
    loaded.graph.save_edge_list(&args.out)?;
    Ok(())
}

/// All-eigenvalue spectrum of the requested Laplacian (L_rw through its
/// symmetric equivalent).
fn spectrum_of(graph: &SimilarityGraph, kind: LaplacianKind) -> Result<Vec<f64>> {
    let dec = match kind {
        LaplacianKind::RandomWalk => {
            let lap = build_laplacian(graph, kind)?;
            eig_symmetric(to_sym_equivalent(&lap)?.values())?
        }
        _ => {
            let lap = build_laplacian(graph, kind)?;
            eig_symmetric(lap.values())?
        }
    };
    Ok(dec.eigenvalues().to_vec())
}

#[derive(Serialize)]
struct ClusterReport<'a> {
    subcommand: &'static str,
    n: usize,
    graph: &'a GraphDescription,
    laplacian: &'static str,
    k: usize,
    seed: u64,
    restarts: usize,
    max_iters: usize,
    /// First min(n, 10) eigenvalues of the chosen Laplacian.
    eigenvalues: Vec<f64>,
    cluster_sizes: Vec<usize>,
    objectives: Objectives,
}

#[derive(Serialize)]
struct Objectives {
    cut: f64,
    ratiocut: f64,
    ncut: f64,
    minmaxcut: Option<f64>,
}

fn run_cluster(args: ClusterArgs) -> Result<()> {
    let start = Instant::now();
    let loaded = args.graph.load()?;
    let graph = &loaded.graph;
    let n = graph.vertex_count();
    if let Some(path) = &args.save_graph {
        graph.save_edge_list(path)?;
    }

    let spectrum = spectrum_of(graph, args.laplacian)?;
    let k = match args.k {
        Some(k) => k,
        None if n >= 3 => crate::diagnostics::choose_k_eigengap(&spectrum, 10.min(n - 1).max(2))?,
        None => 1,
    };

    let mut cfg = SpectralConfig::new(args.laplacian, k, args.seed);
    cfg.restarts = args.restarts;
    cfg.max_iters = args.max_iters;
    let partition = cluster(graph, &cfg)?;
    let cuts = evaluate_cuts(graph, &partition)?;

    let report = ClusterReport {
        subcommand: "cluster",
        n,
        graph: &loaded.description,
        laplacian: args.laplacian.name(),
        k,
        seed: args.seed,
        restarts: args.restarts,
        max_iters: args.max_iters,
        eigenvalues: spectrum.iter().copied().take(10).collect(),
        cluster_sizes: partition.cluster_sizes(),
        objectives: Objectives {
            cut: cuts.cut,
            ratiocut: cuts.ratiocut,
            ncut: cuts.ncut,
            minmaxcut: cuts.minmaxcut,
        },
    };

    std::fs::write(&args.out, partition.to_csv())?;
    write_json(&report, args.report.as_deref())?;
    if let Some(prefix) = &args.svg {
        emit_cluster_svg(
            prefix,
            graph,
            loaded.points.as_ref(),
            &spectrum,
            args.laplacian,
            k,
        )?;
    }
    eprintln!("runtime: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
    Ok(())
}

fn write_json<T: Serialize>(value: &T, path: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable report");
    text.push('\n');
    match path {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Eigenvalue scatter plus one panel per embedding coordinate; for 1-D
/// inputs the x axis is the data coordinate, otherwise the vertex index.
fn emit_cluster_svg(
    prefix: &Path,
    graph: &SimilarityGraph,
    points: Option<&PointSet>,
    spectrum: &[f64],
    kind: LaplacianKind,
    k: usize,
) -> Result<()> {
    emit_spectrum_svg(prefix, spectrum)?;
    let emb = embed(graph, kind, k)?;
    let one_d = points.filter(|p| p.dim() == 1);
    for j in 0..k {
        let pts: Vec<(f64, f64)> = (0..graph.vertex_count())
            .map(|i| {
                let x = match one_d {
                    Some(p) => p.coords()[[i, 0]],
                    None => (i + 1) as f64,
                };
                (x, emb.coords()[[i, j]])
            })
            .collect();
        let x_label = if one_d.is_some() { "x" } else { "vertex" };
        let svg = svg::scatter(
            &format!("eigenvector {}", j + 1),
            x_label,
            &format!("u{}", j + 1),
            &pts,
        );
        std::fs::write(svg_path(prefix, &format!("eigenvector_{}", j + 1)), svg)?;
    }
    Ok(())
}

fn emit_spectrum_svg(prefix: &Path, spectrum: &[f64]) -> Result<()> {
    let shown: Vec<(f64, f64)> = spectrum
        .iter()
        .take(10)
        .enumerate()
        .map(|(i, &l)| ((i + 1) as f64, l))
        .collect();
    let svg = svg::scatter("eigenvalues", "index", "lambda", &shown);
    std::fs::write(svg_path(prefix, "eigenvalues"), svg)?;
    Ok(())
}

fn svg_path(prefix: &Path, name: &str) -> PathBuf {
    let stem = prefix.to_string_lossy();
    PathBuf::from(format!("{stem}_{name}.svg"))
}

#[derive(Serialize)]
struct DiagnoseReport<'a> {
    subcommand: &'static str,
    n: usize,
    graph: &'a GraphDescription,
    laplacian: &'static str,
    suggested_k: usize,
    eigengaps: Vec<f64>,
    unreliable_eigenvalue_indices: Vec<usize>,
    min_degree: f64,
    /// Parameter suggestions; present for point inputs only.
    suggested_epsilon: Option<f64>,
    suggested_sigma: Option<f64>,
    suggested_knn_k: Option<usize>,
}

fn run_diagnose(args: DiagnoseArgs) -> Result<()> {
    let loaded = args.graph.load()?;
    let graph = &loaded.graph;
    let n = graph.vertex_count();
    let spectrum = spectrum_of(graph, args.laplacian)?;
    let core = build_report(&spectrum, graph.degrees(), args.laplacian, args.k_max)?;

    let (suggested_epsilon, suggested_sigma, suggested_knn_k) = match &loaded.points {
        Some(points) if points.len() >= 2 => {
            let distances = euclidean_distances(points);
            (
                Some(suggest_epsilon_mst(&distances)?),
                Some(suggest_sigma(&distances)?),
                Some(suggest_knn_k(points.len())),
            )
        }
        _ => (None, None, None),
    };
    let report = DiagnoseReport {
        subcommand: "diagnose",
        n,
        graph: &loaded.description,
        laplacian: args.laplacian.name(),
        suggested_k: core.suggested_k,
        eigengaps: core.eigengaps,
        unreliable_eigenvalue_indices: core.unreliable_eigenvalue_indices.clone(),
        min_degree: core.min_degree,
        suggested_epsilon,
        suggested_sigma,
        suggested_knn_k,
    };
    write_json(&report, args.out.as_deref())?;

    if let Some(path) = &args.table {
        let reliable_flags: Vec<bool> = if args.laplacian == LaplacianKind::Unnormalized {
            let flagged =
                check_unnormalized_reliability(&spectrum, graph.degrees(), spectrum.len());
            let mut flags = vec![true; n];
            for idx in flagged {
                flags[idx - 1] = false;
            }
            flags
        } else {
            vec![true; n]
        };
        let mut text = String::from("index\tlambda\treliable\n");
        for (i, (&l, &r)) in spectrum.iter().zip(reliable_flags.iter()).enumerate() {
            text.push_str(&format!("{}\t{}\t{}\n", i + 1, l, r));
        }
        std::fs::write(path, text)?;
    }
    if let Some(prefix) = &args.svg {
        emit_spectrum_svg(prefix, &spectrum)?;
    }
    Ok(())
}

fn run_bench(args: BenchArgs) -> Result<()> {
    let graph = match args.cockroach {
        Some(k) => {
            if args.graph.input.is_some()
                || args.graph.load_graph.is_some()
                || args.graph.graph.is_some()
                || args.graph.eps.is_some()
                || args.graph.knn_k.is_some()
                || args.graph.mutual
                || args.graph.sigma.is_some()
            {
                return Err(Error::InvalidParameter(
                    "--cockroach conflicts with the input and graph flags".into(),
                ));
            }
            gen_cockroach_graph(k)?
        }
        None => args.graph.load()?.graph,
    };
    let kind = match args.objective {
        CutObjective::RatioCut => LaplacianKind::Unnormalized,
        _ => LaplacianKind::RandomWalk,
    };
    let cfg = SpectralConfig::new(kind, 2, args.seed);
    let report = relaxation_gap_report(&graph, &cfg)?;
    write_json(&report, args.out.as_deref())?;
    Ok(())
}

fn run_commute(args: CommuteArgs) -> Result<()> {
    let loaded = args.graph.load()?;
    let graph = &loaded.graph;
    let kernel = crate::randomwalk::commute_kernel(graph)?;
    let n = graph.vertex_count();
    let mut text = String::new();
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| {
                crate::randomwalk::commute_distance(&kernel, i, j)
                    .expect("indices in range")
                    .to_string()
            })
            .collect();
        text.push_str(&row.join(","));
        text.push('\n');
    }
    std::fs::write(&args.out, text)?;
    Ok(())
}
