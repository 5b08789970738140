//! `vrank`: generate instances, run the colorers, validate colorings,
//! compute exact rank numbers, benchmark color budgets, and self-check
//! the counting machinery.
//!
//! Exit codes: 0 success/valid, 1 invalid coloring, 2 usage or parse
//! error, 3 algorithm failure (separator not found, budget exceeded,
//! selfcheck failure).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use vrank_core::bench::{records_to_csv, run_bench, BenchError, Suite};
use vrank_core::exact::DEFAULT_SEARCH_BUDGET;
use vrank_core::io::{parse_coloring, parse_graph, write_coloring, write_graph};
use vrank_core::selfcheck::{run_selfcheck, CheckStatus};
use vrank_core::{
    apollonian, centroid_vr_coloring, complete_kary_tree, degenerate_us_coloring,
    exact_rank_number, grid, is_l_vr, is_proper, is_us, is_vr, layered_us_coloring, path,
    separator_lvr_coloring, subdivided_replicated_clique, Coloring, ColorError, ExactOutcome,
    Graph, RankKind, ValidateError, Violation, DEFAULT_PATH_BUDGET,
};

#[derive(Parser)]
#[command(name = "vrank", version, about = "Bounded vertex rankings: generators, colorers, validators and exact baselines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Kary,
    Subclique,
    Path,
    Grid,
    Apollonian,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    LayeredUs,
    SepLvr,
    DegenUs,
    KaryLevel,
    CentroidVr,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Kind {
    Proper,
    #[default]
    Us,
    Lvr,
    Vr,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    PlanarUs,
    PlanarLvr,
    DegenUs,
    TreeExact,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance family in graph text format
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// Parameter for kary / subclique
        #[arg(long)]
        k: Option<usize>,
        /// Vertex count for path / apollonian
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a colorer and self-validate the result
    Color {
        #[arg(long, value_enum)]
        algo: Algo,
        /// Path length bound for sep-lvr
        #[arg(long, default_value_t = 2)]
        l: usize,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring file against a graph
    Validate {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        coloring: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        kind: Kind,
        #[arg(long, default_value_t = 2)]
        l: usize,
    },
    /// Exact minimum colors by brute force (small graphs)
    Exact {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Color-budget experiment, CSV output
    Bench {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cross-check the counting machinery and validator hierarchy
    Selfcheck {
        #[arg(long, default_value_t = 10_000)]
        fuzz_cases: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

fn algorithm(message: impl ToString) -> Failure {
    Failure { code: 3, message: message.to_string() }
}

impl From<ColorError> for Failure {
    fn from(e: ColorError) -> Failure {
        match e {
            ColorError::NoSeparatorFound | ColorError::Disconnected => algorithm(e),
            ColorError::SetsOverlap(_) | ColorError::NotATree => usage(e),
        }
    }
}

impl From<ValidateError> for Failure {
    fn from(e: ValidateError) -> Failure {
        match e {
            ValidateError::BudgetExceeded(_) => algorithm(e),
            ValidateError::ColoringIncomplete { .. } => usage(e),
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn require(opt: Option<usize>, what: &str) -> Result<usize, Failure> {
    opt.ok_or_else(|| usage(format!("missing required flag --{what} for this family")))
}

fn generate(
    family: Family,
    k: Option<usize>,
    n: Option<usize>,
    rows: Option<usize>,
    cols: Option<usize>,
    seed: u64,
    output: Option<&Path>,
) -> Result<u8, Failure> {
    let graph = match family {
        Family::Kary => complete_kary_tree(require(k, "k")?).map_err(usage)?.0,
        Family::Subclique => subdivided_replicated_clique(require(k, "k")?).map_err(usage)?,
        Family::Path => path(require(n, "n")?),
        Family::Grid => grid(require(rows, "rows")?, require(cols, "cols")?),
        Family::Apollonian => apollonian(require(n, "n")?, seed).map_err(usage)?,
    };
    emit(output, &write_graph(&graph))?;
    Ok(0)
}

/// Level coloring of a complete k-ary tree supplied as a graph: infers k
/// from the BFS depth below vertex 0 and verifies the shape before
/// coloring level-i vertices with k - i.
fn kary_level_from_graph(g: &Graph) -> Result<Coloring, Failure> {
    let n = g.n();
    if n == 0 || g.m() != n - 1 {
        return Err(usage("input is not a tree"));
    }
    let tree = g
        .bfs_tree(0)
        .map_err(|_| usage("input is not connected"))?;
    let k = tree.depth.iter().max().copied().unwrap_or(0) + 1;
    let expected = complete_kary_tree(k).map_err(usage)?.0;
    if expected.n() != n {
        return Err(usage(format!(
            "input has {n} vertices, a complete {k}-ary tree with {k} levels has {}",
            expected.n()
        )));
    }
    for v in 0..n {
        let children = g
            .neighbors(v)
            .iter()
            .filter(|&&u| tree.depth[u] == tree.depth[v] + 1)
            .count();
        let want = if tree.depth[v] + 1 < k { k } else { 0 };
        if children != want {
            return Err(usage(format!(
                "vertex {v} has {children} children, expected {want}; input must be a complete k-ary tree rooted at vertex 0"
            )));
        }
    }
    let colors = tree.depth.iter().map(|&d| k - d).collect();
    Ok(Coloring::new(colors).expect("levels are below k"))
}

fn color(algo: Algo, l: usize, input: &Path, output: Option<&Path>) -> Result<u8, Failure> {
    if l == 0 {
        return Err(usage("--l must be at least 1"));
    }
    let g = parse_graph(&read_file(input)?).map_err(usage)?;
    let coloring = match algo {
        Algo::LayeredUs => layered_us_coloring(&g).0,
        Algo::SepLvr => separator_lvr_coloring(&g, l)?,
        Algo::DegenUs => degenerate_us_coloring(&g),
        Algo::KaryLevel => kary_level_from_graph(&g)?,
        Algo::CentroidVr => centroid_vr_coloring(&g)?,
    };
    let verdict = match algo {
        Algo::SepLvr => is_l_vr(&g, &coloring, l, DEFAULT_PATH_BUDGET)?,
        Algo::CentroidVr => is_vr(&g, &coloring)?,
        _ => is_us(&g, &coloring)?,
    };
    let valid = verdict.is_none();
    emit(output, &write_coloring(&coloring))?;
    println!("colors {} valid {}", coloring.max_color(), valid);
    Ok(if valid { 0 } else { 1 })
}

fn print_violation(v: &Violation) {
    let path: Vec<String> = v.path.iter().map(|x| (x + 1).to_string()).collect();
    println!("violation {:?} path {}", v.kind, path.join(" "));
}

fn validate(
    input: &Path,
    coloring: &Path,
    kind: Kind,
    l: usize,
) -> Result<u8, Failure> {
    if l == 0 {
        return Err(usage("--l must be at least 1"));
    }
    let g = parse_graph(&read_file(input)?).map_err(usage)?;
    let c = parse_coloring(&read_file(coloring)?).map_err(usage)?;
    let verdict = match kind {
        Kind::Proper => is_proper(&g, &c)?,
        Kind::Us => is_us(&g, &c)?,
        Kind::Lvr => is_l_vr(&g, &c, l, DEFAULT_PATH_BUDGET)?,
        Kind::Vr => is_vr(&g, &c)?,
    };
    match verdict {
        None => {
            println!("valid");
            Ok(0)
        }
        Some(v) => {
            print_violation(&v);
            Ok(1)
        }
    }
}

fn exact(kind: Kind, l: Option<usize>, max_k: Option<usize>, input: &Path) -> Result<u8, Failure> {
    let g = parse_graph(&read_file(input)?).map_err(usage)?;
    let rank_kind = match kind {
        Kind::Proper => return Err(usage("exact supports --kind us, lvr or vr")),
        Kind::Us => RankKind::Us,
        Kind::Lvr => {
            let l = l.ok_or_else(|| usage("--kind lvr requires --l"))?;
            if l == 0 {
                return Err(usage("--l must be at least 1"));
            }
            RankKind::Lvr(l)
        }
        Kind::Vr => RankKind::Vr,
    };
    let max_k = max_k.unwrap_or_else(|| g.n().max(1));
    let outcome = exact_rank_number(&g, rank_kind, max_k, DEFAULT_SEARCH_BUDGET)
        .map_err(algorithm)?;
    match outcome {
        ExactOutcome::Ranked { k, witness } => {
            let verdict = match rank_kind {
                RankKind::Us => is_us(&g, &witness)?,
                RankKind::Lvr(l) => is_l_vr(&g, &witness, l, DEFAULT_PATH_BUDGET)?,
                RankKind::Vr => is_vr(&g, &witness)?,
            };
            if verdict.is_some() {
                return Err(algorithm("internal error: witness failed validation"));
            }
            println!("k {k}");
            print!("{}", write_coloring(&witness));
            Ok(0)
        }
        ExactOutcome::Infeasible => {
            println!("INFEASIBLE");
            Ok(0)
        }
    }
}

fn bench(
    suite: SuiteArg,
    sizes: &[usize],
    l: Option<usize>,
    seed: u64,
    output: Option<&Path>,
) -> Result<u8, Failure> {
    let suite = match suite {
        SuiteArg::PlanarUs => Suite::PlanarUs,
        SuiteArg::PlanarLvr => Suite::PlanarLvr,
        SuiteArg::DegenUs => Suite::DegenUs,
        SuiteArg::TreeExact => Suite::TreeExact,
    };
    let records = run_bench(suite, sizes, l, seed).map_err(|e| match e {
        BenchError::SizesNotAscending | BenchError::Gen(_) => usage(e),
        BenchError::Color(_) | BenchError::Exact(_) | BenchError::Validate(_) => algorithm(e),
    })?;
    emit(output, &records_to_csv(&records))?;
    Ok(0)
}

fn selfcheck(fuzz_cases: usize, seed: u64) -> Result<u8, Failure> {
    let report = run_selfcheck(fuzz_cases, seed);
    for check in &report.checks {
        let tag = match check.status {
            CheckStatus::Pass => "PASS       ",
            CheckStatus::Discrepancy => "DISCREPANCY",
            CheckStatus::Fail => "FAIL       ",
        };
        println!("{tag} {}: {}", check.name, check.detail);
    }
    if report.all_ok() {
        Ok(0)
    } else {
        Err(algorithm("selfcheck reported failures"))
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Generate { family, k, n, rows, cols, seed, output } => {
            generate(family, k, n, rows, cols, seed, output.as_deref())
        }
        Command::Color { algo, l, input, output } => color(algo, l, &input, output.as_deref()),
        Command::Validate { input, coloring, kind, l } => validate(&input, &coloring, kind, l),
        Command::Exact { kind, l, max_k, input } => exact(kind, l, max_k, &input),
        Command::Bench { suite, sizes, l, seed, output } => {
            bench(suite, &sizes, l, seed, output.as_deref())
        }
        Command::Selfcheck { fuzz_cases, seed } => selfcheck(fuzz_cases, seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
