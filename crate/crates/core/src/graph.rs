//! Immutable simple undirected graphs and the structural primitives the
//! coloring algorithms are built on: degeneracy orderings, graph squares,
//! BFS trees, connected components and induced subgraphs.
//!
//! Vertices are dense integers `0..n`. Every operation is a pure function
//! over an immutable graph, and all tie-breaking is by ascending vertex
//! index so that results are reproducible bit for bit.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint out of range (n = {n})")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not connected from vertex {root}")]
    Disconnected { root: usize },
}

/// Simple undirected graph with a sorted adjacency-list view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected rather than
    /// dropped, so generator bugs surface immediately.
    pub fn build(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, m: set.len(), adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Peeling ordering per repeated minimum-degree removal (ties broken by
    /// smallest vertex index), reversed, so that every vertex has at most
    /// `d` neighbors earlier in the ordering. `d` is reported as measured:
    /// the maximum minimum degree encountered while peeling.
    pub fn degeneracy_ordering(&self) -> DegeneracyOrdering {
        let n = self.n;
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let max_deg = degree.iter().copied().max().unwrap_or(0);
        let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); max_deg + 1];
        for v in 0..n {
            buckets[degree[v]].insert(v);
        }
        let mut removed = vec![false; n];
        let mut removal = Vec::with_capacity(n);
        let mut d = 0;
        let mut cur = 0;
        for _ in 0..n {
            while buckets[cur].is_empty() {
                cur += 1;
            }
            let v = *buckets[cur].iter().next().expect("nonempty bucket");
            buckets[cur].remove(&v);
            removed[v] = true;
            d = d.max(cur);
            removal.push(v);
            for &u in &self.adj[v] {
                if !removed[u] {
                    buckets[degree[u]].remove(&u);
                    degree[u] -= 1;
                    buckets[degree[u]].insert(u);
                    if degree[u] < cur {
                        cur = degree[u];
                    }
                }
            }
        }
        removal.reverse();
        DegeneracyOrdering { order: removal, d }
    }

    /// The square graph: same vertices, an edge wherever the distance in
    /// `self` is 1 or 2.
    pub fn square(&self) -> Graph {
        let mut edges = Vec::new();
        let mut mark = vec![usize::MAX; self.n];
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    edges.push((u, v));
                }
                for &w in &self.adj[v] {
                    if u < w && mark[w] != u && !self.has_edge(u, w) {
                        mark[w] = u;
                        edges.push((u, w));
                    }
                }
            }
        }
        Graph::build(self.n, edges).expect("square edges are in range and loop-free")
    }

    /// Deterministic BFS tree: FIFO queue, neighbors scanned in ascending
    /// index order, so ties between equal-length paths resolve to the
    /// lower-indexed parent. Errors if `root` does not reach every vertex.
    pub fn bfs_tree(&self, root: usize) -> Result<BfsTree, GraphError> {
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![usize::MAX; self.n];
        parent[root] = root;
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut seen = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    seen += 1;
                    queue.push_back(v);
                }
            }
        }
        if seen != self.n {
            return Err(GraphError::Disconnected { root });
        }
        Ok(BfsTree { root, parent, depth })
    }

    /// Vertex sets of the connected components, each sorted ascending,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        part.push(v);
                        queue.push_back(v);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    /// The subgraph induced on `keep`, relabeled to a dense `0..keep.len()`
    /// range, plus the map from new index to original vertex so colorings
    /// lift back.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_to_old: Vec<usize> = keep.to_vec();
        new_to_old.sort_unstable();
        new_to_old.dedup();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut edges = Vec::new();
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if old_u < old_v && old_to_new[old_v] != usize::MAX {
                    edges.push((new_u, old_to_new[old_v]));
                }
            }
        }
        let sub = Graph::build(new_to_old.len(), edges).expect("relabeled edges are valid");
        (sub, new_to_old)
    }
}

/// Vertex permutation with the measured degeneracy witness `d`: for every
/// position `i`, `order[i]` has at most `d` neighbors among `order[..i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    pub order: Vec<usize>,
    pub d: usize,
}

/// BFS tree rooted at `root`; `parent[root] == root`, and `depth[v]` is the
/// true shortest-path distance from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTree {
    pub root: usize,
    pub parent: Vec<usize>,
    pub depth: Vec<usize>,
}

impl BfsTree {
    /// Vertices of the tree path from the root to `v`, root first.
    pub fn root_path(&self, v: usize) -> Vec<usize> {
        let mut path = Vec::with_capacity(self.depth[v] + 1);
        let mut cur = v;
        while cur != self.root {
            path.push(cur);
            cur = self.parent[cur];
        }
        path.push(self.root);
        path.reverse();
        path
    }
}
