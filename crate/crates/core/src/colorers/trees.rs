//! Tree colorings: the level coloring of complete k-ary trees and a
//! centroid-decomposition vertex ranking used as the tree baseline.

use crate::coloring::Coloring;
use crate::generators::{complete_kary_tree, GenError};
use crate::graph::Graph;

use super::ColorError;

/// Builds the complete k-ary tree with k levels and colors every level-i
/// vertex with `k - i`: exactly `k` colors, and a valid unique-superior
/// coloring.
pub fn kary_level_coloring(k: usize) -> Result<(Graph, Coloring), GenError> {
    let (graph, _root, levels) = complete_kary_tree(k)?;
    let colors = levels.iter().map(|&level| k - level).collect();
    let coloring = Coloring::new(colors).expect("levels are below k");
    Ok((graph, coloring))
}

/// Size of each subtree of the piece hanging under `v`, and the centroid:
/// the smallest-index vertex whose removal leaves components of at most
/// half the piece.
fn centroid_of_piece(g: &Graph, active: &[bool], start: usize, size: usize) -> usize {
    fn subtree_size(
        g: &Graph,
        active: &[bool],
        v: usize,
        parent: usize,
        sizes: &mut [usize],
    ) -> usize {
        let mut total = 1;
        for &u in g.neighbors(v) {
            if u != parent && active[u] {
                total += subtree_size(g, active, u, v, sizes);
            }
        }
        sizes[v] = total;
        total
    }
    let mut sizes = vec![0usize; g.n()];
    subtree_size(g, active, start, usize::MAX, &mut sizes);
    let mut best = (usize::MAX, usize::MAX);
    let mut stack = vec![(start, usize::MAX)];
    while let Some((v, parent)) = stack.pop() {
        let mut worst = size - sizes[v];
        for &u in g.neighbors(v) {
            if u != parent && active[u] {
                worst = worst.max(sizes[u]);
                stack.push((u, v));
            }
        }
        if (worst, v) < best {
            best = (worst, v);
        }
    }
    best.1
}

fn decompose(
    g: &Graph,
    active: &mut [bool],
    start: usize,
    size: usize,
    level: usize,
    top: usize,
    colors: &mut [usize],
) {
    let centroid = centroid_of_piece(g, active, start, size);
    colors[centroid] = top - level;
    active[centroid] = false;
    for i in 0..g.neighbors(centroid).len() {
        let u = g.neighbors(centroid)[i];
        if !active[u] {
            continue;
        }
        // size of the piece hanging off this neighbor
        let mut piece = 0usize;
        let mut stack = vec![(u, centroid)];
        while let Some((v, parent)) = stack.pop() {
            piece += 1;
            for &w in g.neighbors(v) {
                if w != parent && active[w] {
                    stack.push((w, v));
                }
            }
        }
        decompose(g, active, u, piece, level + 1, top, colors);
    }
}

/// Vertex ranking of a tree by recursive centroid decomposition: the
/// centroid of each piece takes the highest remaining color of its
/// recursion level, so at most `floor(log2 n) + 1` colors are used.
pub fn centroid_vr_coloring(g: &Graph) -> Result<Coloring, ColorError> {
    let n = g.n();
    if n == 0 || g.m() != n - 1 || g.components().len() != 1 {
        return Err(ColorError::NotATree);
    }
    let top = n.ilog2() as usize + 1;
    let mut colors = vec![0usize; n];
    let mut active = vec![true; n];
    decompose(g, &mut active, 0, n, 0, top, &mut colors);
    Ok(Coloring::new(colors).expect("decomposition colors every vertex"))
}
