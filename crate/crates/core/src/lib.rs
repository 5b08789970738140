//! Bounded vertex rankings of graphs: unique-superior colorings and
//! l-vertex rankings, with validators that return concrete violation
//! witnesses, constructive colorers for sparse graph families, exact
//! brute-force baselines at desk scale, deterministic instance
//! generators, text formats, and a benchmark harness.

pub mod bench;
pub mod coloring;
pub mod colorers;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod selfcheck;
pub mod validators;

pub use coloring::{Coloring, ColoringError};
pub use colorers::{
    centroid_vr_coloring, degenerate_us_coloring, kary_level_coloring, layered_us_coloring,
    separator_lvr_coloring, separator_lvr_with_trace, shared_neighbor_coloring,
    three_path_separator, ColorError, LayerPartition, SeparatorNode,
};
pub use exact::{
    exact_rank_number, min_inflexible_tree, root_flexibility, ExactError, ExactOutcome,
    InflexibleTree, RankKind,
};
pub use generators::{
    apollonian, complete_kary_tree, grid, path, subdivided_replicated_clique, GenError,
    SplitMix64,
};
pub use graph::{BfsTree, DegeneracyOrdering, Graph, GraphError};
pub use validators::{
    is_l_vr, is_proper, is_us, is_vr, ValidateError, Violation, ViolationKind,
    DEFAULT_PATH_BUDGET,
};
