//! Exhaustive enumeration of rooted and free trees up to isomorphism.
//!
//! Rooted trees are generated canonically: a tree is the root plus a
//! multiset of canonical child subtrees, and children are chosen in
//! non-increasing (size, generation index) order so every isomorphism
//! class appears exactly once. Free trees are rooted trees deduplicated by
//! re-rooting at a centroid.

use crate::graph::Graph;

/// Level sequences (preorder root distances) of all canonical rooted
/// trees, grouped by vertex count `1..=n_max`.
fn sequences_by_size(n_max: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n_max + 1];
    if n_max == 0 {
        return by_size;
    }
    by_size[1].push(vec![0]);
    for n in 2..=n_max {
        let mut out = Vec::new();
        let mut acc = Vec::new();
        compose(n - 1, (n - 1, usize::MAX), &by_size, &mut acc, &mut out);
        by_size[n] = out;
    }
    by_size
}

/// Appends every canonical tree whose children multiset (chosen
/// non-increasing, bounded above by `bound`) totals `remaining` vertices.
fn compose(
    remaining: usize,
    bound: (usize, usize),
    by_size: &[Vec<Vec<usize>>],
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        let mut seq = vec![0];
        for &(s, i) in acc.iter() {
            seq.extend(by_size[s][i].iter().map(|&d| d + 1));
        }
        out.push(seq);
        return;
    }
    for s in (1..=remaining.min(bound.0)).rev() {
        let hi = if s == bound.0 {
            bound.1.min(by_size[s].len() - 1)
        } else {
            by_size[s].len() - 1
        };
        for i in 0..=hi {
            acc.push((s, i));
            compose(remaining - s, (s, i), by_size, acc, out);
            acc.pop();
        }
    }
}

fn sequence_to_graph(seq: &[usize]) -> Graph {
    let mut last_at_depth = vec![usize::MAX; seq.len()];
    last_at_depth[0] = 0;
    let mut edges = Vec::with_capacity(seq.len().saturating_sub(1));
    for (v, &d) in seq.iter().enumerate().skip(1) {
        edges.push((last_at_depth[d - 1], v));
        last_at_depth[d] = v;
    }
    Graph::build(seq.len(), edges).expect("level sequence describes a tree")
}

/// All rooted trees with exactly `n` vertices, one per isomorphism class,
/// rooted at vertex 0, in the canonical generation order.
pub fn rooted_trees(n: usize) -> Vec<Graph> {
    sequences_by_size(n)
        .pop()
        .unwrap_or_default()
        .iter()
        .map(|seq| sequence_to_graph(seq))
        .collect()
}

/// Canonical encoding of a fixed rooted tree: children encodings sorted
/// descending, wrapped in brackets.
fn canonical_encoding(g: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut child_encs: Vec<Vec<u8>> = g
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| canonical_encoding(g, u, v))
        .collect();
    child_encs.sort_unstable_by(|a, b| b.cmp(a));
    let mut enc = vec![b'('];
    for c in child_encs {
        enc.extend(c);
    }
    enc.push(b')');
    enc
}

fn subtree_sizes(g: &Graph, v: usize, parent: usize, sizes: &mut [usize]) {
    sizes[v] = 1;
    for &u in g.neighbors(v) {
        if u != parent {
            subtree_sizes(g, u, v, sizes);
            sizes[v] += sizes[u];
        }
    }
}

/// Centroids of a tree: one or two vertices minimizing the largest
/// component left by their removal.
pub fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut sizes = vec![0; n];
    subtree_sizes(g, 0, usize::MAX, &mut sizes);
    let mut best = (usize::MAX, Vec::new());
    // maximum component after removing v, using sizes rooted at 0
    let mut stack = vec![(0usize, usize::MAX)];
    while let Some((v, parent)) = stack.pop() {
        let mut worst = n - sizes[v];
        for &u in g.neighbors(v) {
            if u != parent {
                worst = worst.max(sizes[u]);
                stack.push((u, v));
            }
        }
        match worst.cmp(&best.0) {
            std::cmp::Ordering::Less => best = (worst, vec![v]),
            std::cmp::Ordering::Equal => best.1.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    best.1.sort_unstable();
    best.1
}

/// All free trees with exactly `n` vertices, one per isomorphism class.
pub fn free_trees(n: usize) -> Vec<Graph> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for t in rooted_trees(n) {
        let enc = centroids(&t)
            .into_iter()
            .map(|c| canonical_encoding(&t, c, usize::MAX))
            .max()
            .expect("tree has a centroid");
        if seen.insert(enc) {
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_counts_match_known_table() {
        let expected = [1usize, 1, 2, 4, 9, 20, 48, 115, 286];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(rooted_trees(n + 1).len(), want, "rooted n = {}", n + 1);
        }
    }

    #[test]
    fn free_counts_match_known_table() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(free_trees(n + 1).len(), want, "free n = {}", n + 1);
        }
    }

    #[test]
    fn generated_trees_are_trees() {
        for n in 1..=7 {
            for t in rooted_trees(n) {
                assert_eq!(t.n(), n);
                assert_eq!(t.m(), n - 1);
                assert_eq!(t.components().len(), 1);
            }
        }
    }

    #[test]
    fn centroid_of_path() {
        let p5 = crate::generators::path(5);
        assert_eq!(centroids(&p5), vec![2]);
        let p4 = crate::generators::path(4);
        assert_eq!(centroids(&p4), vec![1, 2]);
    }
}
