//! Independent oracles shared by the integration suites. Everything here
//! is written directly against the definitions, bypassing the library's
//! search and union-find machinery, so agreement is meaningful.
//!
//! Each test target pulls a different subset of these helpers.
#![allow(dead_code)]

use vrank_core::{Coloring, Graph, SplitMix64};

/// All vertex pairs of an n-vertex graph in lexicographic order; bit i of
/// an edge mask refers to `pairs(n)[i]`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn graph_from_mask(n: usize, mask: u64, pairs: &[(usize, usize)]) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::build(n, edges).expect("mask edges are valid")
}

/// Connectivity straight off the edge mask, no Graph construction.
pub fn mask_connected(n: usize, mask: u64, pairs: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut parts = n;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                parts -= 1;
            }
        }
    }
    parts == 1
}

/// Definition-level vertex ranking check: enumerate every simple path and
/// demand a strictly higher interior color between equal-colored ends.
pub fn brute_force_vr_valid(g: &Graph, c: &Coloring) -> bool {
    fn has_violation(
        g: &Graph,
        c: &Coloring,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
    ) -> bool {
        let cur = *path.last().unwrap();
        for &w in g.neighbors(cur) {
            if on_path[w] {
                continue;
            }
            if c.color(w) == c.color(path[0])
                && path[1..].iter().all(|&x| c.color(x) <= c.color(path[0]))
            {
                return true;
            }
            on_path[w] = true;
            path.push(w);
            if has_violation(g, c, path, on_path) {
                return true;
            }
            path.pop();
            on_path[w] = false;
        }
        false
    }
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        let mut path = vec![start];
        on_path[start] = true;
        let bad = has_violation(g, c, &mut path, &mut on_path);
        on_path[start] = false;
        if bad {
            return false;
        }
    }
    true
}

/// Direct l = 2 check: every edge bicolored, and for every middle vertex
/// no two equal-colored neighbors at or above the middle's color.
pub fn direct_us_valid(g: &Graph, c: &Coloring) -> bool {
    for (u, v) in g.edges() {
        if c.color(u) == c.color(v) {
            return false;
        }
    }
    for mid in 0..g.n() {
        let hood = g.neighbors(mid);
        for i in 0..hood.len() {
            for j in i + 1..hood.len() {
                if c.color(hood[i]) == c.color(hood[j]) && c.color(mid) <= c.color(hood[i]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Deterministic coloring with colors in `1..=palette`.
pub fn seeded_coloring(n: usize, palette: usize, rng: &mut SplitMix64) -> Coloring {
    let colors = (0..n).map(|_| 1 + rng.next_index(palette)).collect();
    Coloring::new(colors).expect("positive colors")
}
