//! Color-budget benchmark harness: generate an instance family, run the
//! suite's colorer, validate the result, and emit one CSV record per
//! instance. Given the same seed and arguments the records are identical
//! byte for byte except for the runtime column.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::colorers::{
    degenerate_us_coloring, layered_us_coloring, separator_lvr_with_trace, ColorError,
};
use crate::exact::{exact_rank_number, ExactError, ExactOutcome, RankKind, DEFAULT_SEARCH_BUDGET};
use crate::generators::{apollonian, complete_kary_tree, grid, subdivided_replicated_clique, GenError};
use crate::validators::{is_l_vr, is_us, ValidateError, DEFAULT_PATH_BUDGET};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Color(#[from] ColorError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Validate(#[from] ValidateError),
    #[error("sizes must be ascending")]
    SizesNotAscending,
}

/// Benchmark suites: which family is generated and which colorer runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Layered us-coloring on seeded stacked triangulations.
    PlanarUs,
    /// Separator l-vertex ranking on square grids.
    PlanarLvr,
    /// Degree-split us-coloring on subdivided replicated cliques (sizes
    /// are the clique parameter k).
    DegenUs,
    /// Exact us-numbers of complete k-ary trees (sizes are k).
    TreeExact,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::PlanarUs => "planar-us",
            Suite::PlanarLvr => "planar-lvr",
            Suite::DegenUs => "degen-us",
            Suite::TreeExact => "tree-exact",
        }
    }
}

/// One row of the experiment; `valid` is always the verdict of the
/// matching validator, never assumed.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    pub l: usize,
    pub colors: usize,
    pub depth: usize,
    pub valid: bool,
    pub runtime_ms: u128,
}

pub const CSV_HEADER: &str = "instance,n,m,algorithm,l,colors,depth,valid,runtime_ms";

pub fn records_to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.instance, r.n, r.m, r.algorithm, r.l, r.colors, r.depth, r.valid, r.runtime_ms
        )
        .unwrap();
    }
    out
}

fn run_one(suite: Suite, size: usize, l: usize, seed: u64) -> Result<BenchRecord, BenchError> {
    match suite {
        Suite::PlanarUs => {
            let g = apollonian(size, seed)?;
            let start = Instant::now();
            let (coloring, partition) = layered_us_coloring(&g);
            let runtime_ms = start.elapsed().as_millis();
            let valid = is_us(&g, &coloring)?.is_none();
            Ok(BenchRecord {
                instance: format!("apollonian-{size}-s{seed}"),
                n: g.n(),
                m: g.m(),
                algorithm: "layered-us".into(),
                l: 0,
                colors: coloring.max_color(),
                depth: partition.layers.len(),
                valid,
                runtime_ms,
            })
        }
        Suite::PlanarLvr => {
            // realize the size as the largest square grid that fits
            let side = (1..).take_while(|s| s * s <= size).last().unwrap_or(1);
            let g = grid(side, side);
            let start = Instant::now();
            let (coloring, nodes) = separator_lvr_with_trace(&g, l)?;
            let runtime_ms = start.elapsed().as_millis();
            let valid = is_l_vr(&g, &coloring, l, DEFAULT_PATH_BUDGET)?.is_none();
            Ok(BenchRecord {
                instance: format!("grid-{side}x{side}"),
                n: g.n(),
                m: g.m(),
                algorithm: "sep-lvr".into(),
                l,
                colors: coloring.max_color(),
                depth: nodes.iter().map(|n| n.depth()).max().unwrap_or(0),
                valid,
                runtime_ms,
            })
        }
        Suite::DegenUs => {
            let g = subdivided_replicated_clique(size)?;
            let start = Instant::now();
            let coloring = degenerate_us_coloring(&g);
            let runtime_ms = start.elapsed().as_millis();
            let valid = is_us(&g, &coloring)?.is_none();
            Ok(BenchRecord {
                instance: format!("subclique-{size}"),
                n: g.n(),
                m: g.m(),
                algorithm: "degen-us".into(),
                l: 0,
                colors: coloring.max_color(),
                depth: 0,
                valid,
                runtime_ms,
            })
        }
        Suite::TreeExact => {
            let (g, _, _) = complete_kary_tree(size)?;
            let start = Instant::now();
            let outcome = exact_rank_number(&g, RankKind::Us, size, DEFAULT_SEARCH_BUDGET)?;
            let runtime_ms = start.elapsed().as_millis();
            let (colors, valid) = match outcome {
                ExactOutcome::Ranked { k, witness } => {
                    (k, is_us(&g, &witness)?.is_none())
                }
                ExactOutcome::Infeasible => (0, false),
            };
            Ok(BenchRecord {
                instance: format!("kary-{size}"),
                n: g.n(),
                m: g.m(),
                algorithm: "exact-us".into(),
                l: 0,
                colors,
                depth: 0,
                valid,
                runtime_ms,
            })
        }
    }
}

/// Runs a suite over ascending sizes; instances run on a worker pool but
/// records come back in input order. `l` defaults to 2 where it applies.
pub fn run_bench(
    suite: Suite,
    sizes: &[usize],
    l: Option<usize>,
    seed: u64,
) -> Result<Vec<BenchRecord>, BenchError> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(BenchError::SizesNotAscending);
    }
    let l = l.unwrap_or(2);
    sizes
        .par_iter()
        .map(|&size| run_one(suite, size, l, seed))
        .collect()
}
