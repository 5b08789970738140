//! Shared instances for the criterion benchmarks.

use vrank_core::{apollonian, grid, Graph};

pub fn planar_instance(n: usize) -> Graph {
    apollonian(n, 42).expect("benchmark instance generates")
}

pub fn grid_instance(side: usize) -> Graph {
    grid(side, side)
}
