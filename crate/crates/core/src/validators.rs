//! Validators for proper colorings, unique-superior colorings, l-vertex
//! rankings and full vertex rankings. Each validator either accepts or
//! returns a concrete [`Violation`] witness that can be re-checked on its
//! own.
//!
//! A coloring is an l-vertex ranking when every simple path of length at
//! most `l` between two equal-colored vertices contains an interior vertex
//! of strictly higher color. `l = 2` is the unique-superior case, and the
//! unbounded case is a full vertex ranking.

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;

/// Step budget for path enumeration; adversarially dense inputs exceed it
/// and get a clean error instead of a runaway search.
pub const DEFAULT_PATH_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValidateError {
    #[error("coloring covers {got} vertices but the graph has {expected}")]
    ColoringIncomplete { expected: usize, got: usize },
    #[error("path enumeration exceeded the step budget of {0}")]
    BudgetExceeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// A monochromatic edge; `path` holds its two endpoints.
    NotProper,
    /// A simple path whose equal-colored endpoints see no strictly higher
    /// interior color.
    PathViolation,
}

/// Concrete witness that a coloring fails a ranking kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub path: Vec<usize>,
}

impl Violation {
    /// Re-checks the witness against its own invariants: the path is
    /// simple and connected in `g`, endpoints share a color, no interior
    /// vertex is strictly higher, and the length respects `max_len` when
    /// given.
    pub fn verify(&self, g: &Graph, c: &Coloring, max_len: Option<usize>) -> bool {
        let p = &self.path;
        if p.len() < 2 {
            return false;
        }
        if let Some(l) = max_len {
            if p.len() - 1 > l {
                return false;
            }
        }
        let mut seen = p.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != p.len() {
            return false;
        }
        if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return false;
        }
        let end = c.color(p[0]);
        if c.color(*p.last().unwrap()) != end {
            return false;
        }
        if p[1..p.len() - 1].iter().any(|&v| c.color(v) > end) {
            return false;
        }
        match self.kind {
            ViolationKind::NotProper => p.len() == 2,
            ViolationKind::PathViolation => p.len() > 2,
        }
    }
}

fn check_total(g: &Graph, c: &Coloring) -> Result<(), ValidateError> {
    if c.len() != g.n() {
        return Err(ValidateError::ColoringIncomplete {
            expected: g.n(),
            got: c.len(),
        });
    }
    Ok(())
}

/// Accepts iff no edge is monochromatic; otherwise returns the
/// lexicographically first bad edge.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<Option<Violation>, ValidateError> {
    check_total(g, c)?;
    for (u, v) in g.edges() {
        if c.color(u) == c.color(v) {
            return Ok(Some(Violation {
                kind: ViolationKind::NotProper,
                path: vec![u, v],
            }));
        }
    }
    Ok(None)
}

/// Depth-limited DFS over all simple paths of length at most `l`,
/// explicit stack so adversarially deep paths hit the step budget rather
/// than the call stack. Neighbors are scanned in ascending order, so the
/// witness is the first in (start vertex, lexicographic path) order.
/// Note `l >= 1` already implies properness: a length-1 path has no
/// interior vertex to carry a higher color.
pub fn is_l_vr(
    g: &Graph,
    c: &Coloring,
    l: usize,
    budget: u64,
) -> Result<Option<Violation>, ValidateError> {
    assert!(l >= 1, "path length bound must be at least 1");
    check_total(g, c)?;
    let l = l.min(g.n().saturating_sub(1)).max(1);
    let mut steps = 0u64;
    let mut on_path = vec![false; g.n()];
    let mut path: Vec<usize> = Vec::with_capacity(l + 1);
    // (next neighbor index, highest interior color excluding both ends)
    let mut frames: Vec<(usize, usize)> = Vec::with_capacity(l + 1);
    for start in 0..g.n() {
        let start_color = c.color(start);
        path.clear();
        frames.clear();
        path.push(start);
        on_path[start] = true;
        frames.push((0, 0));
        while let Some(&mut (ref mut idx, interior_max)) = frames.last_mut() {
            let cur = *path.last().unwrap();
            let Some(&next) = g.neighbors(cur).get(*idx) else {
                on_path[cur] = false;
                path.pop();
                frames.pop();
                continue;
            };
            *idx += 1;
            if on_path[next] {
                continue;
            }
            steps += 1;
            if steps > budget {
                for &v in &path {
                    on_path[v] = false;
                }
                return Err(ValidateError::BudgetExceeded(budget));
            }
            let next_interior = if path.len() == 1 {
                0
            } else {
                interior_max.max(c.color(cur))
            };
            if c.color(next) == start_color && next_interior <= start_color {
                path.push(next);
                let kind = if path.len() == 2 {
                    ViolationKind::NotProper
                } else {
                    ViolationKind::PathViolation
                };
                return Ok(Some(Violation { kind, path }));
            }
            if path.len() <= l.saturating_sub(1) {
                path.push(next);
                on_path[next] = true;
                frames.push((0, next_interior));
            }
        }
    }
    Ok(None)
}

/// Unique-superior check: an alias for [`is_l_vr`] with `l = 2`, not a
/// separate code path.
pub fn is_us(g: &Graph, c: &Coloring) -> Result<Option<Violation>, ValidateError> {
    is_l_vr(g, c, 2, DEFAULT_PATH_BUDGET)
}

struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Full vertex ranking check via the component characterization: scanning
/// colors in ascending order and joining the subgraph induced by colors
/// `<= t` with a union-find, the coloring is a ranking iff no component
/// ever contains two vertices of the current color `t`. On failure the
/// witness path is reconstructed by BFS through the offending component.
pub fn is_vr(g: &Graph, c: &Coloring) -> Result<Option<Violation>, ValidateError> {
    check_total(g, c)?;
    let n = g.n();
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_unstable_by_key(|&v| (c.color(v), v));
    let mut dsu = DisjointSet::new(n);
    let mut active = vec![false; n];
    // per color class: which roots already hold a vertex of this color
    let mut stamp = vec![0u32; n];
    let mut first_of_root = vec![usize::MAX; n];
    let mut class = 0u32;
    let mut i = 0;
    while i < n {
        let t = c.color(by_color[i]);
        let mut j = i;
        while j < n && c.color(by_color[j]) == t {
            let v = by_color[j];
            active[v] = true;
            for &u in g.neighbors(v) {
                if active[u] {
                    dsu.union(v, u);
                }
            }
            j += 1;
        }
        class += 1;
        for &v in &by_color[i..j] {
            let root = dsu.find(v);
            if stamp[root] == class {
                let path = active_path(g, &active, first_of_root[root], v);
                let kind = if path.len() == 2 {
                    ViolationKind::NotProper
                } else {
                    ViolationKind::PathViolation
                };
                return Ok(Some(Violation { kind, path }));
            }
            stamp[root] = class;
            first_of_root[root] = v;
        }
        i = j;
    }
    Ok(None)
}

/// Shortest path between `from` and `to` within the active subgraph.
fn active_path(g: &Graph, active: &[bool], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &v in g.neighbors(u) {
            if active[v] && prev[v] == usize::MAX {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::build(n, edges.iter().copied()).unwrap()
    }

    fn coloring(colors: &[usize]) -> Coloring {
        Coloring::new(colors.to_vec()).unwrap()
    }

    #[test]
    fn proper_accepts_and_rejects() {
        let k2 = graph(2, &[(0, 1)]);
        assert_eq!(is_proper(&k2, &coloring(&[1, 2])).unwrap(), None);
        let bad = is_proper(&k2, &coloring(&[1, 1])).unwrap().unwrap();
        assert_eq!(bad.kind, ViolationKind::NotProper);
        assert_eq!(bad.path, vec![0, 1]);
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(is_proper(&p3, &coloring(&[1, 2, 1])).unwrap(), None);
    }

    #[test]
    fn proper_requires_total_coloring() {
        let k2 = graph(2, &[(0, 1)]);
        assert_eq!(
            is_proper(&k2, &coloring(&[1])),
            Err(ValidateError::ColoringIncomplete { expected: 2, got: 1 })
        );
    }

    #[test]
    fn l_vr_accepts_p4_example() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            is_l_vr(&p4, &coloring(&[1, 2, 1, 3]), 2, DEFAULT_PATH_BUDGET).unwrap(),
            None
        );
    }

    #[test]
    fn l_vr_reports_first_witness() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let v = is_l_vr(&p4, &coloring(&[1, 2, 1, 2]), 2, DEFAULT_PATH_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(v.kind, ViolationKind::PathViolation);
        assert_eq!(v.path, vec![1, 2, 3]);
        assert!(v.verify(&p4, &coloring(&[1, 2, 1, 2]), Some(2)));
    }

    #[test]
    fn l_vr_budget_exceeds_cleanly() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            is_l_vr(&k4, &coloring(&[1, 2, 3, 4]), 3, 5),
            Err(ValidateError::BudgetExceeded(5))
        );
    }

    #[test]
    fn vr_examples() {
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(is_vr(&k3, &coloring(&[1, 2, 3])).unwrap(), None);

        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let col = coloring(&[1, 2, 1, 2]);
        let v = is_vr(&c4, &col).unwrap().unwrap();
        assert!(v.verify(&c4, &col, None));
        assert_eq!(c4.neighbors(v.path[0]).len(), 2);

        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(is_vr(&p4, &coloring(&[1, 2, 1, 3])).unwrap(), None);
    }

    #[test]
    fn vr_catches_monochromatic_edge() {
        let k2 = graph(2, &[(0, 1)]);
        let v = is_vr(&k2, &coloring(&[2, 2])).unwrap().unwrap();
        assert_eq!(v.kind, ViolationKind::NotProper);
    }

    #[test]
    fn us_is_the_l2_alias() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let c = coloring(&[1, 2, 1, 2]);
        assert_eq!(
            is_us(&p4, &c).unwrap(),
            is_l_vr(&p4, &c, 2, DEFAULT_PATH_BUDGET).unwrap()
        );
    }
}
