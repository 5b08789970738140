//! Deterministic construction of the instance families used throughout:
//! complete k-ary trees, subdivided replicated cliques, paths, grids, and
//! seeded random stacked triangulations for planar benchmarking.

use thiserror::Error;

use crate::graph::Graph;

/// Hard cap on generated vertex counts; keeps runaway parameters from
/// allocating the machine away.
pub const MAX_GENERATED_VERTICES: usize = 1 << 22;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("instance would have {requested} vertices, over the limit {limit}")]
    SizeOverflow { requested: u128, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

/// SplitMix64: the repo's only random source, embedded so that every port
/// reproduces identical instances from the same seed.
///
/// Update equations, all in wrapping 64-bit arithmetic:
///
/// ```text
/// state += 0x9E3779B97F4A7C15
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// output = z ^ (z >> 31)
/// ```
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough index in `0..bound` (modulo reduction; bias is
    /// irrelevant at desk scale and the result is deterministic, which is
    /// what matters here).
    pub fn next_index(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

fn check_size(requested: u128) -> Result<usize, GenError> {
    if requested > MAX_GENERATED_VERTICES as u128 {
        return Err(GenError::SizeOverflow { requested, limit: MAX_GENERATED_VERTICES });
    }
    Ok(requested as usize)
}

/// Complete k-ary tree with k levels: height `k - 1`, every internal
/// vertex has exactly `k` children, `(k^k - 1)/(k - 1)` vertices in
/// BFS-layout numbering (root = 0). Returns the graph, the root, and the
/// level (root distance) of every vertex.
pub fn complete_kary_tree(k: usize) -> Result<(Graph, usize, Vec<usize>), GenError> {
    if k < 1 {
        return Err(GenError::InvalidParameter("k must be at least 1"));
    }
    if k == 1 {
        return Ok((Graph::build(1, []).unwrap(), 0, vec![0]));
    }
    let mut total: u128 = 0;
    let mut level_size: u128 = 1;
    let mut level_sizes = Vec::with_capacity(k);
    for _ in 0..k {
        total += level_size;
        level_sizes.push(level_size);
        level_size *= k as u128;
    }
    let n = check_size(total)?;
    let mut edges = Vec::with_capacity(n - 1);
    let mut levels = Vec::with_capacity(n);
    let mut level_start = 0usize;
    for (level, &size) in level_sizes.iter().enumerate() {
        let size = size as usize;
        levels.extend(std::iter::repeat_n(level, size));
        if level + 1 < k {
            let next_start = level_start + size;
            for i in 0..size {
                let parent = level_start + i;
                for child in 0..k {
                    edges.push((parent, next_start + i * k + child));
                }
            }
        }
        level_start += size;
    }
    Ok((Graph::build(n, edges).unwrap(), 0, levels))
}

/// The 2-degenerate lower-bound family: `k` hub vertices (the original
/// clique), each clique edge replicated `k` times, every edge subdivided.
/// Hubs are `0..k`; the `k * C(k, 2)` subdividers follow in lexicographic
/// (pair, copy) order.
pub fn subdivided_replicated_clique(k: usize) -> Result<Graph, GenError> {
    if k < 2 {
        return Err(GenError::InvalidParameter("k must be at least 2"));
    }
    let pairs = (k as u128 * (k as u128 - 1)) / 2;
    let n = check_size(k as u128 + k as u128 * pairs)?;
    let mut edges = Vec::with_capacity(2 * (n - k));
    let mut next = k;
    for i in 0..k {
        for j in i + 1..k {
            for _ in 0..k {
                edges.push((i, next));
                edges.push((j, next));
                next += 1;
            }
        }
    }
    Ok(Graph::build(n, edges).unwrap())
}

/// Path on `n` vertices, numbered along the path.
pub fn path(n: usize) -> Graph {
    Graph::build(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// Grid graph in row-major numbering.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let idx = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    Graph::build(rows * cols, edges).unwrap()
}

/// Seeded stacked (Apollonian) triangulation: start from a triangle and
/// repeatedly pick an existing face uniformly at random, inserting a new
/// vertex joined to its three corners. Planar and 3-degenerate by
/// construction; the chosen face is replaced in place and the two new
/// faces are appended, so a seed pins the instance exactly.
pub fn apollonian(n_target: usize, seed: u64) -> Result<Graph, GenError> {
    if n_target < 3 {
        return Err(GenError::InvalidParameter("n_target must be at least 3"));
    }
    check_size(n_target as u128)?;
    let mut rng = SplitMix64::new(seed);
    let mut faces = vec![(0usize, 1usize, 2usize)];
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for v in 3..n_target {
        let i = rng.next_index(faces.len());
        let (a, b, c) = faces[i];
        edges.push((a, v));
        edges.push((b, v));
        edges.push((c, v));
        faces[i] = (a, b, v);
        faces.push((a, c, v));
        faces.push((b, c, v));
    }
    Ok(Graph::build(n_target, edges).unwrap())
}
