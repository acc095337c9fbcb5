use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use dagsort::analysis::{greedy_clique_partition, partition_lower_bound, working_set_sizes};
use dagsort::dag;
use dagsort::extensions::{count_extensions, estimate_log_t, EXACT_LIMIT};
use dagsort::gen;
use dagsort::io::{self, FileError, FormatError};
use dagsort::sorter::{
    build_reduced_dag, topological_heapsort, topological_heapsort_with_insertion_opts,
    ThsiOptions,
};
use dagsort::{ComparisonProvider, Dag, Error, VertexId};

#[derive(Parser)]
#[command(
    name = "dagsort",
    version,
    about = "Sort DAG vertices under a hidden total order; count, sample, and analyze"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Ths,
    Thsi,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Chain,
    Antichain,
    Random,
    Layered,
}

impl KindArg {
    fn name(self) -> &'static str {
        match self {
            KindArg::Chain => "chain",
            KindArg::Antichain => "antichain",
            KindArg::Random => "random",
            KindArg::Layered => "layered",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file and its matching hidden-order file
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Arc probability; defaults to 0.5 for random and 1.0 for layered
        #[arg(long)]
        p: Option<f64>,
        /// Layer count for the layered kind
        #[arg(long, default_value_t = 2)]
        layers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the graph file
        #[arg(long)]
        graph: PathBuf,
        /// Where to write the hidden-order file
        #[arg(long)]
        order: PathBuf,
    },
    /// Sort a graph's vertices, querying the hidden order as little as possible
    Sort {
        #[arg(long, value_enum, default_value = "thsi")]
        algo: AlgoArg,
        #[arg(long)]
        graph: PathBuf,
        /// Hidden-order file the comparison oracle answers from
        #[arg(long)]
        order: PathBuf,
        /// Also print comparison count, instance sizes, and timing
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        json: bool,
        /// Skip the path reduction when the longest path covers at most a
        /// (1 - EPS) fraction of the vertices
        #[arg(long, value_name = "EPS", num_args = 0..=1, default_missing_value = "0.5")]
        skip_reduction_epsilon: Option<f64>,
    },
    /// Count the topological orders exactly (at most 25 vertices)
    Count {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Estimate log2 of the number of topological orders by sampling
    Estimate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of samples; sample i uses seed + i
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long)]
        json: bool,
    },
    /// Clique-partition and working-set analysis of a sorting run
    Analyze {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Deterministic benchmark grid, one CSV row per run
    Bench {
        /// Instance kinds, comma separated
        #[arg(long, value_enum, value_delimiter = ',', required = true)]
        kind: Vec<KindArg>,
        /// Vertex counts, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 2)]
        layers: usize,
        /// Base seed; repeat r of a configuration uses seed + r
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        /// Algorithms to run; both when omitted
        #[arg(long, value_enum, value_delimiter = ',')]
        algo: Vec<AlgoArg>,
        /// CSV output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_name = "EPS", num_args = 0..=1, default_missing_value = "0.5")]
        skip_reduction_epsilon: Option<f64>,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::SelfLoop(_) | Error::Cycle(_) => 3,
            Error::InconsistentOrder { .. } => 4,
            Error::TooLarge { .. } => 5,
            Error::VertexOutOfRange { .. } | Error::NotAPermutation { .. } => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        match e {
            FileError::Format(FormatError::Graph(g)) => g.into(),
            other => CliError {
                code: 2,
                message: other.to_string(),
            },
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen {
            kind,
            n,
            p,
            layers,
            seed,
            graph,
            order,
        } => cmd_gen(kind, n, p, layers, seed, &graph, &order),
        Command::Sort {
            algo,
            graph,
            order,
            stats,
            json,
            skip_reduction_epsilon,
        } => cmd_sort(algo, &graph, &order, stats, json, skip_reduction_epsilon),
        Command::Count { graph, json } => cmd_count(&graph, json),
        Command::Estimate {
            graph,
            seed,
            repeats,
            json,
        } => cmd_estimate(&graph, seed, repeats, json),
        Command::Analyze { graph, order, json } => cmd_analyze(&graph, &order, json),
        Command::Bench {
            kind,
            n,
            p,
            layers,
            seed,
            repeats,
            algo,
            out,
            skip_reduction_epsilon,
        } => cmd_bench(
            &kind,
            &n,
            p,
            layers,
            seed,
            repeats,
            &algo,
            out.as_deref(),
            skip_reduction_epsilon,
        ),
    }
}

fn build_instance(
    kind: KindArg,
    n: usize,
    p: Option<f64>,
    layers: usize,
    seed: u64,
) -> Result<gen::Instance, CliError> {
    if n > u32::MAX as usize {
        return Err(invalid(format!("--n {n} exceeds the id range")));
    }
    if let Some(p) = p {
        if !(0.0..=1.0).contains(&p) {
            return Err(invalid(format!("--p must lie in [0, 1], got {p}")));
        }
    }
    if layers == 0 {
        return Err(invalid("--layers must be at least 1"));
    }
    Ok(match kind {
        KindArg::Chain => gen::chain(n),
        KindArg::Antichain => gen::antichain(n, seed),
        KindArg::Random => gen::random(n, p.unwrap_or(0.5), seed),
        KindArg::Layered => gen::layered(n, layers, p.unwrap_or(1.0), seed),
    })
}

fn check_epsilon(eps: Option<f64>) -> Result<(), CliError> {
    if let Some(e) = eps {
        if !(0.0..=1.0).contains(&e) {
            return Err(invalid(format!(
                "--skip-reduction-epsilon must lie in [0, 1], got {e}"
            )));
        }
    }
    Ok(())
}

fn cmd_gen(
    kind: KindArg,
    n: usize,
    p: Option<f64>,
    layers: usize,
    seed: u64,
    graph: &Path,
    order: &Path,
) -> Result<(), CliError> {
    let inst = build_instance(kind, n, p, layers, seed)?;
    io::write_dag(graph, &inst.dag)?;
    io::write_order(order, &inst.hidden_order)?;
    Ok(())
}

fn load_instance(graph: &Path, order: &Path) -> Result<(Dag, Vec<VertexId>), CliError> {
    let dag = io::read_dag(graph)?;
    let order = io::read_order(order)?;
    Ok((dag, order))
}

fn join_ids(order: &[VertexId]) -> String {
    order
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_algo(
    algo: AlgoArg,
    dag: &Dag,
    provider: &mut ComparisonProvider,
    eps: Option<f64>,
) -> Result<dagsort::sorter::SortRun, Error> {
    match algo {
        AlgoArg::Ths => topological_heapsort(dag, provider),
        AlgoArg::Thsi => topological_heapsort_with_insertion_opts(
            dag,
            provider,
            ThsiOptions {
                skip_reduction_epsilon: eps,
            },
        ),
    }
}

fn cmd_sort(
    algo: AlgoArg,
    graph: &Path,
    order: &Path,
    stats: bool,
    json: bool,
    eps: Option<f64>,
) -> Result<(), CliError> {
    check_epsilon(eps)?;
    let (dag, order) = load_instance(graph, order)?;
    // detect cycles before validating the order, so a cyclic instance is
    // reported as such rather than as an inconsistent order
    dag::kahn_order(&dag)?;
    let mut provider = ComparisonProvider::new(&dag, &order)?;
    let started = Instant::now();
    let run = run_algo(algo, &dag, &mut provider, eps)?;
    let micros = started.elapsed().as_micros() as u64;
    let path = dag::longest_path(&dag)?;
    let reduced_n = build_reduced_dag(&dag, &path).dag.vertex_count();
    if json {
        let obj = json!({
            "algo": run.algorithm.to_string(),
            "n": dag.vertex_count(),
            "m": dag.arc_count(),
            "order": run.order.iter().map(|v| v.0).collect::<Vec<_>>(),
            "comparisons": run.comparisons,
            "ell": path.len(),
            "reduced_n": reduced_n,
            "micros": micros,
        });
        println!("{obj}");
    } else {
        println!("{}", join_ids(&run.order));
        if stats {
            println!(
                "comparisons={} n={} m={} ell={} reduced_n={} micros={}",
                run.comparisons,
                dag.vertex_count(),
                dag.arc_count(),
                path.len(),
                reduced_n,
                micros
            );
        }
    }
    Ok(())
}

fn cmd_count(graph: &Path, json: bool) -> Result<(), CliError> {
    let dag = io::read_dag(graph)?;
    let c = count_extensions(&dag)?;
    if json {
        println!("{}", json!({"t": c.value.to_string(), "log2": c.log2}));
    } else {
        println!("T={} log2={:?}", c.value, c.log2);
    }
    Ok(())
}

fn cmd_estimate(graph: &Path, seed: u64, repeats: usize, json: bool) -> Result<(), CliError> {
    if repeats == 0 {
        return Err(invalid("--repeats must be at least 1"));
    }
    let dag = io::read_dag(graph)?;
    let mut runs: Vec<(u64, u64)> = Vec::with_capacity(repeats);
    for i in 0..repeats {
        let s = seed.wrapping_add(i as u64);
        let (_, comparisons) = estimate_log_t(&dag, s)?;
        runs.push((s, comparisons));
    }
    let mean = runs.iter().map(|&(_, c)| c as f64).sum::<f64>() / repeats as f64;
    if json {
        let obj = json!({
            "repeats": repeats,
            "runs": runs
                .iter()
                .map(|&(s, c)| json!({"seed": s, "comparisons": c}))
                .collect::<Vec<_>>(),
            "mean": mean,
        });
        println!("{obj}");
    } else {
        for &(s, c) in &runs {
            println!("seed={s} comparisons={c}");
        }
        println!("mean={mean:?}");
    }
    Ok(())
}

fn cmd_analyze(graph: &Path, order: &Path, json: bool) -> Result<(), CliError> {
    let (dag, order) = load_instance(graph, order)?;
    dag::kahn_order(&dag)?;
    let mut provider = ComparisonProvider::new(&dag, &order)?;
    let run = topological_heapsort(&dag, &mut provider)?;
    let part = greedy_clique_partition(&run.intervals);
    let ws = working_set_sizes(&run.intervals);
    let n = dag.vertex_count();
    let ell = dag::longest_path(&dag)?.len();
    let sum_sls = part.sum_size_log_size();
    let bound = partition_lower_bound(&part, n);
    let exact = if n <= EXACT_LIMIT {
        Some(count_extensions(&dag)?)
    } else {
        None
    };
    let verdict = |ok: bool| if ok { "OK" } else { "FAIL" };
    let clique_bound = exact
        .as_ref()
        .map(|c| verdict(bound <= c.log2 + 1e-9))
        .unwrap_or("NA");
    let working_set_cap = verdict(ws.sum_log2() <= 2.0 * sum_sls + 1e-9);
    let path_bound = exact
        .as_ref()
        .map(|c| verdict(&c.value * &c.value >= BigUint::from(1u32) << (n - ell)))
        .unwrap_or("NA");
    if json {
        let cliques: Vec<_> = part
            .cliques()
            .iter()
            .zip(part.critical_times())
            .map(|(c, &t)| {
                json!({
                    "critical_time": t,
                    "members": c.iter().map(|v| v.0).collect::<Vec<_>>(),
                })
            })
            .collect();
        let obj = json!({
            "n": n,
            "m": dag.arc_count(),
            "ell": ell,
            "algo": run.algorithm.to_string(),
            "comparisons": run.comparisons,
            "cliques": cliques,
            "selection_order": part.selection_order(),
            "sum_size_log_size": sum_sls,
            "clique_lower_bound": bound,
            "sum_log2_w": ws.sum_log2(),
            "log2t": exact.as_ref().map(|c| c.log2),
            "checks": {
                "clique_bound": clique_bound,
                "working_set_cap": working_set_cap,
                "path_bound": path_bound,
            },
        });
        println!("{obj}");
    } else {
        println!(
            "n={} m={} ell={} algo={} comparisons={}",
            n,
            dag.arc_count(),
            ell,
            run.algorithm,
            run.comparisons
        );
        println!("cliques={}", part.len());
        for (i, (c, &t)) in part.cliques().iter().zip(part.critical_times()).enumerate() {
            println!(
                "clique {i}: critical_time={t} size={} members={}",
                c.len(),
                join_ids(c)
            );
        }
        println!("sum_size_log_size={sum_sls:?}");
        println!("clique_lower_bound={bound:?}");
        println!("sum_log2_w={:?}", ws.sum_log2());
        match &exact {
            Some(c) => println!("log2T={:?}", c.log2),
            None => println!("log2T=NA"),
        }
        println!(
            "checks: clique_bound={clique_bound} working_set_cap={working_set_cap} path_bound={path_bound}"
        );
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    kinds: &[KindArg],
    ns: &[usize],
    p: Option<f64>,
    layers: usize,
    seed: u64,
    repeats: usize,
    algos: &[AlgoArg],
    out: Option<&Path>,
    eps: Option<f64>,
) -> Result<(), CliError> {
    check_epsilon(eps)?;
    if repeats == 0 {
        return Err(invalid("--repeats must be at least 1"));
    }
    let algos: Vec<AlgoArg> = if algos.is_empty() {
        vec![AlgoArg::Ths, AlgoArg::Thsi]
    } else {
        algos.to_vec()
    };
    let mut csv = String::from("kind,n,m,seed,algo,comparisons,log2T,ell,reduced_n,micros\n");
    for &kind in kinds {
        for &n in ns {
            for r in 0..repeats {
                let s = seed.wrapping_add(r as u64);
                let inst = build_instance(kind, n, p, layers, s)?;
                let path = dag::longest_path(&inst.dag)?;
                let ell = path.len();
                let reduced_n = build_reduced_dag(&inst.dag, &path).dag.vertex_count();
                let log2t = if n <= EXACT_LIMIT {
                    Some(count_extensions(&inst.dag)?.log2)
                } else {
                    None
                };
                let log2t_field = log2t
                    .map(|x| format!("{x:?}"))
                    .unwrap_or_else(|| "NA".to_string());
                for &algo in &algos {
                    let mut provider = ComparisonProvider::new(&inst.dag, &inst.hidden_order)?;
                    let started = Instant::now();
                    let run = run_algo(algo, &inst.dag, &mut provider, eps)?;
                    let micros = started.elapsed().as_micros() as u64;
                    debug_assert_eq!(run.order, inst.hidden_order);
                    csv.push_str(&format!(
                        "{},{},{},{},{},{},{},{},{},{}\n",
                        kind.name(),
                        n,
                        inst.dag.arc_count(),
                        s,
                        run.algorithm,
                        run.comparisons,
                        log2t_field,
                        ell,
                        reduced_n,
                        micros
                    ));
                }
            }
        }
    }
    match out {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}
