//! `gpd` — exact general d-position numbers from the command line.
//!
//! Four subcommands cover the workflow end to end: `solve` computes one
//! value and prints a JSON run record, `table` sweeps the geodesic bound
//! over a range and prints CSV, `generate` emits a named graph family as an
//! edge list, and `srg` emits the strong d-resolving graph, optionally with
//! clique-number bound lines.
//!
//! Exit codes: 0 success, 2 bad input or parse failure, 3 disconnected
//! graph, 4 resource cap or time limit exceeded. Stdout carries only data;
//! diagnostics go to stderr.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use gpd::derived::strong_resolving_graph;
use gpd::edgelist::{parse_edge_list, write_edge_list};
use gpd::generators::{Family, GadgetSpec};
use gpd::{
    all_pairs_distances, clique_number, gpd_branch_and_bound, gpd_bruteforce, gpd_greedy,
    is_gdp_by_characterization, is_gdp_by_definition, DistanceMatrix, Graph, SolveOptions,
    SolveReport, Vertex,
};

/// Version tag carried by both output schemas (JSON field, CSV comment).
const SCHEMA_VERSION: u32 = 1;

/// `--verify` cross-checks the value against brute force up to this size.
const BRUTE_CROSS_CHECK_MAX: usize = 14;

#[derive(Parser)]
#[command(
    name = "gpd",
    version,
    about = "Exact general d-position numbers of finite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance and print a JSON run record
    Solve(SolveArgs),
    /// Sweep the geodesic bound over a range and print CSV rows
    Table(TableArgs),
    /// Print a generated graph family as an edge list
    Generate(GenerateArgs),
    /// Print the strong d-resolving graph as an edge list
    Srg(SrgArgs),
}

/// Where the input graph comes from: an edge-list file, a generated family,
/// or both (a file-backed payload feeding the clique_reduction family).
#[derive(Args)]
struct SourceArgs {
    /// Edge-list file; with `--family clique_reduction` it is the payload
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,

    /// Family to generate: path, cycle, complete, complete_bipartite,
    /// cartesian_grid, star_gadget, broom_tree, chained_gadget, clique_tail,
    /// clique_reduction, random_connected
    #[arg(long, value_name = "NAME")]
    family: Option<Family>,

    /// Generator parameter as KEY=VALUE; repeat for several
    #[arg(long = "param", value_name = "KEY=VALUE")]
    param: Vec<String>,

    /// Seed for the random_connected family
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: SourceArgs,

    /// Geodesic length bound (at least 1)
    #[arg(long, value_name = "D")]
    d: usize,

    /// Solver to run
    #[arg(long, value_enum, default_value_t = SolveMethod::Bnb)]
    method: SolveMethod,

    /// Worker threads: 0 = all available, 1 = sequential
    #[arg(long, default_value_t = 0, value_name = "N")]
    workers: usize,

    /// Give up after this long
    #[arg(long, value_name = "MS")]
    time_limit_ms: Option<u64>,

    /// Include the witness set in the record
    #[arg(long)]
    witness: bool,

    /// Re-check the witness through both membership routes (and brute
    /// force, on instances of at most 14 vertices) before printing
    #[arg(long)]
    verify: bool,

    /// Largest instance brute force accepts
    #[arg(long, default_value_t = 24, value_name = "N")]
    bruteforce_cap: usize,

    /// Largest instance branch and bound accepts
    #[arg(long, default_value_t = 40, value_name = "N")]
    bnb_cap: usize,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    source: SourceArgs,

    /// Inclusive range A..B of geodesic bounds, or a single value
    #[arg(long, value_name = "A..B")]
    d: DRange,

    /// Solver to run for every row
    #[arg(long, value_enum, default_value_t = SolveMethod::Bnb)]
    method: SolveMethod,

    /// Worker threads: 0 = all available, 1 = sequential
    #[arg(long, default_value_t = 0, value_name = "N")]
    workers: usize,

    /// Give up after this long, per row
    #[arg(long, value_name = "MS")]
    time_limit_ms: Option<u64>,

    /// Largest instance brute force accepts
    #[arg(long, default_value_t = 24, value_name = "N")]
    bruteforce_cap: usize,

    /// Largest instance branch and bound accepts
    #[arg(long, default_value_t = 40, value_name = "N")]
    bnb_cap: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    source: SourceArgs,
}

#[derive(Args)]
struct SrgArgs {
    #[command(flatten)]
    source: SourceArgs,

    /// Geodesic length bound (at least 2)
    #[arg(long, value_name = "D")]
    d: usize,

    /// Also print `omega_srg=` and `gp_d=` comment lines
    #[arg(long)]
    bound: bool,

    /// Worker threads: 0 = all available, 1 = sequential
    #[arg(long, default_value_t = 0, value_name = "N")]
    workers: usize,

    /// Largest instance branch and bound accepts
    #[arg(long, default_value_t = 40, value_name = "N")]
    bnb_cap: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SolveMethod {
    /// Exhaustive search over the defining triple condition
    Bruteforce,
    /// Branch and bound over the clique-decomposition oracle
    Bnb,
    /// Fast lower-bound heuristic
    Greedy,
}

/// Inclusive `A..B` range (or a single value) for `table --d`.
#[derive(Clone, Copy, Debug)]
struct DRange {
    lo: usize,
    hi: usize,
}

impl FromStr for DRange {
    type Err = String;

    fn from_str(s: &str) -> Result<DRange, String> {
        let end = |raw: &str| {
            raw.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{raw}` is not a non-negative integer"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let (lo, hi) = (end(a)?, end(b)?);
                if lo > hi {
                    return Err(format!("range `{s}` is empty"));
                }
                Ok(DRange { lo, hi })
            }
            None => {
                let v = end(s)?;
                Ok(DRange { lo: v, hi: v })
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] gpd::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid input: {0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verify(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Lib(e) => match e {
                gpd::Error::InvalidInput(_) | gpd::Error::Parse(_) => 2,
                gpd::Error::Disconnected => 3,
                gpd::Error::ResourceCap(_) | gpd::Error::TimeLimit(_) => 4,
            },
            CliError::Verify(_) => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gpd: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Table(args) => cmd_table(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Srg(args) => cmd_srg(args),
    }
}

// ---------------------------------------------------------------------------
// Input resolution
// ---------------------------------------------------------------------------

/// A resolved input graph plus the strings describing it in output rows.
struct Source {
    graph: Graph,
    family: String,
    params: String,
    seed: Option<u64>,
}

fn load_source(args: &SourceArgs) -> Result<Source, CliError> {
    let file_graph = args
        .graph
        .as_deref()
        .map(|path| -> Result<Graph, CliError> {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(parse_edge_list(&text)?)
        })
        .transpose()?;

    let Some(family) = args.family else {
        if !args.param.is_empty() {
            return Err(CliError::Usage("--param needs --family".into()));
        }
        return match (file_graph, &args.graph) {
            (Some(graph), Some(path)) => Ok(Source {
                graph,
                family: "file".to_string(),
                params: path.display().to_string(),
                seed: None,
            }),
            _ => Err(CliError::Usage(
                "provide --graph FILE or --family NAME".into(),
            )),
        };
    };

    let mut spec = GadgetSpec::new(family);
    for kv in &args.param {
        let (key, value) = kv
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--param `{kv}` is not KEY=VALUE")))?;
        spec.params
            .insert(key.trim().to_string(), value.trim().to_string());
    }
    spec.seed = args.seed;
    spec.payload = file_graph;
    let graph = spec.build()?;

    let mut params: Vec<String> = spec
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    if let Some(seed) = args.seed {
        params.retain(|p| !p.starts_with("seed="));
        params.push(format!("seed={seed}"));
    }
    if let Some(path) = &args.graph {
        params.push(format!("payload={}", path.display()));
    }
    Ok(Source {
        graph,
        family: family.name().to_string(),
        params: params.join(" "),
        seed: args.seed,
    })
}

/// `family=cycle n=8`-style description used in headers and comments.
fn describe(src: &Source) -> String {
    if src.params.is_empty() {
        format!("family={}", src.family)
    } else {
        format!("family={} {}", src.family, src.params)
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_solve(args: SolveArgs) -> Result<(), CliError> {
    let src = load_source(&args.source)?;
    let dm = all_pairs_distances(&src.graph)?;
    let opts = solve_options(
        args.workers,
        args.bruteforce_cap,
        args.bnb_cap,
        args.time_limit_ms,
    );
    let report = run_method(args.method, &src.graph, &dm, args.d, &opts)?;

    let verified = if args.verify {
        check_witness(&src.graph, &dm, args.d, args.method, &report, &opts)?;
        Some(true)
    } else {
        None
    };

    let record = RunRecord {
        schema: SCHEMA_VERSION,
        command: command_echo(),
        input: fingerprint(&src.graph),
        params: RunParams {
            d: args.d,
            workers: args.workers,
            bruteforce_cap: args.bruteforce_cap,
            bnb_cap: args.bnb_cap,
            time_limit_ms: args.time_limit_ms,
            seed: src.seed,
        },
        value: report.value,
        witness: args.witness.then(|| report.witness.iter().collect()),
        method: report.method.name(),
        nodes_explored: report.nodes_explored,
        elapsed_ms: report.elapsed.as_millis() as u64,
        verified,
        timestamp: unix_now(),
    };
    println!(
        "{}",
        serde_json::to_string(&record).expect("run record serializes")
    );
    Ok(())
}

fn cmd_table(args: TableArgs) -> Result<(), CliError> {
    if args.d.lo < 1 {
        return Err(CliError::Usage(
            "the geodesic bound must be at least 1".into(),
        ));
    }
    let src = load_source(&args.source)?;
    let dm = all_pairs_distances(&src.graph)?;
    let opts = solve_options(
        args.workers,
        args.bruteforce_cap,
        args.bnb_cap,
        args.time_limit_ms,
    );
    println!("# schema: {SCHEMA_VERSION}");
    println!("family,params,d,value,method,elapsed_ms");
    for d in args.d.lo..=args.d.hi {
        let report = run_method(args.method, &src.graph, &dm, d, &opts)?;
        println!(
            "{},{},{},{},{},{}",
            csv_field(&src.family),
            csv_field(&src.params),
            d,
            report.value,
            report.method.name(),
            report.elapsed.as_millis()
        );
    }
    Ok(())
}

fn cmd_generate(args: GenerateArgs) -> Result<(), CliError> {
    if args.source.family.is_none() {
        return Err(CliError::Usage("generate needs --family NAME".into()));
    }
    let src = load_source(&args.source)?;
    print!("{}", write_edge_list(&src.graph, &[&describe(&src)]));
    Ok(())
}

fn cmd_srg(args: SrgArgs) -> Result<(), CliError> {
    let src = load_source(&args.source)?;
    let dm = all_pairs_distances(&src.graph)?;
    let srg = strong_resolving_graph(&src.graph, &dm, args.d)?;
    let opts = solve_options(args.workers, 24, args.bnb_cap, None);

    let mut comments = vec![format!(
        "strong {}-resolving graph of {}",
        args.d,
        describe(&src)
    )];
    if args.bound {
        let omega = clique_number(&srg, &opts)?.value;
        comments.push(format!("omega_srg={omega}"));
        if src.graph.n() <= opts.bnb_cap {
            let exact = gpd_branch_and_bound(&src.graph, &dm, args.d, &opts)?.value;
            comments.push(format!("gp_d={exact}"));
        } else {
            eprintln!("gpd: base graph exceeds the branch-and-bound cap, omitting gp_d");
        }
    }
    let refs: Vec<&str> = comments.iter().map(String::as_str).collect();
    print!("{}", write_edge_list(&srg, &refs));
    Ok(())
}

// ---------------------------------------------------------------------------
// Solver plumbing
// ---------------------------------------------------------------------------

fn solve_options(
    workers: usize,
    bruteforce_cap: usize,
    bnb_cap: usize,
    time_limit_ms: Option<u64>,
) -> SolveOptions {
    SolveOptions {
        bruteforce_cap,
        bnb_cap,
        workers,
        time_limit: time_limit_ms.map(Duration::from_millis),
    }
}

fn run_method(
    method: SolveMethod,
    g: &Graph,
    dm: &DistanceMatrix,
    d: usize,
    opts: &SolveOptions,
) -> gpd::Result<SolveReport> {
    match method {
        SolveMethod::Bruteforce => gpd_bruteforce(g, dm, d, opts),
        SolveMethod::Bnb => gpd_branch_and_bound(g, dm, d, opts),
        SolveMethod::Greedy => gpd_greedy(g, dm, d, opts),
    }
}

/// Re-checks a report before printing: the witness must pass the defining
/// triple condition and (for d >= 2) the clique-decomposition route, and on
/// instances small enough for brute force the value must be optimal for the
/// exact methods, or a valid lower bound for greedy.
fn check_witness(
    g: &Graph,
    dm: &DistanceMatrix,
    d: usize,
    method: SolveMethod,
    report: &SolveReport,
    opts: &SolveOptions,
) -> Result<(), CliError> {
    if report.witness.len() != report.value {
        return Err(CliError::Verify("witness size differs from value".into()));
    }
    if !is_gdp_by_definition(dm, &report.witness, d) {
        return Err(CliError::Verify(
            "witness fails the triple condition".into(),
        ));
    }
    if d >= 2 && !is_gdp_by_characterization(g, dm, &report.witness, d)? {
        return Err(CliError::Verify(
            "witness fails the clique-decomposition check".into(),
        ));
    }
    if g.n() <= BRUTE_CROSS_CHECK_MAX.min(opts.bruteforce_cap) {
        let brute = gpd_bruteforce(g, dm, d, opts)?;
        let consistent = match method {
            SolveMethod::Greedy => report.value <= brute.value,
            _ => report.value == brute.value,
        };
        if !consistent {
            return Err(CliError::Verify(format!(
                "value {} disagrees with brute force {}",
                report.value, brute.value
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Output records
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RunRecord {
    schema: u32,
    command: String,
    input: InputFingerprint,
    params: RunParams,
    value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<Vertex>>,
    method: &'static str,
    nodes_explored: u64,
    elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    timestamp: u64,
}

#[derive(Serialize)]
struct InputFingerprint {
    n: usize,
    m: usize,
    sha256: String,
}

#[derive(Serialize)]
struct RunParams {
    d: usize,
    workers: usize,
    bruteforce_cap: usize,
    bnb_cap: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    time_limit_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

/// Hash of the canonical edge-list text, so identical graphs fingerprint
/// identically however they were specified.
fn fingerprint(g: &Graph) -> InputFingerprint {
    let digest = Sha256::digest(write_edge_list(g, &[]).as_bytes());
    let mut sha256 = String::with_capacity(64);
    for byte in digest {
        let _ = write!(sha256, "{byte:02x}");
    }
    InputFingerprint {
        n: g.n(),
        m: g.m(),
        sha256,
    }
}

fn command_echo() -> String {
    std::env::args().collect::<Vec<_>>().join(" ")
}

fn unix_now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

/// Quotes a CSV field only when it contains a comma, quote, or newline.
fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}
