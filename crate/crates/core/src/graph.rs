//! Finite simple undirected graphs on dense vertex ids.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Marker for unreachable vertices in distance vectors.
pub const UNREACHABLE: usize = usize::MAX;

/// A simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph { n, adj: vec![Vec::new(); n] }
    }

    /// Builds a graph, rejecting loops, out-of-range ids and repeated edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for (u, list) in g.adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!("repeated edge at vertex {u}")));
            }
        }
        Ok(g)
    }

    /// Builds a graph, silently merging repeated edges. Loops are still rejected.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e.dedup();
        SimpleGraph::new(n, &e)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbours of `v`.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree, zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Adjacency test by binary search.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adjacency rows as bitsets.
    pub fn adjacency_bitsets(&self) -> Vec<FixedBitSet> {
        self.adj
            .iter()
            .map(|list| {
                let mut b = FixedBitSet::with_capacity(self.n);
                for &v in list {
                    b.insert(v);
                }
                b
            })
            .collect()
    }

    /// Breadth-first distances from `src`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Component index per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![UNREACHABLE; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if comp[s] != UNREACHABLE {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if comp[v] == UNREACHABLE {
                        comp[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// True when the graph has at most one component.
    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Two-colouring by BFS, or an edge closing an odd cycle.
    pub fn bipartition(&self) -> std::result::Result<Vec<u8>, (usize, usize)> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return Err((u.min(v), u.max(v)));
                    }
                }
            }
        }
        Ok(side)
    }

    /// Subgraph induced by `keep`, with vertices renumbered in the given order.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut index = vec![UNREACHABLE; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SimpleGraph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != UNREACHABLE {
                    g.adj[i].push(index[w]);
                }
            }
            g.adj[i].sort_unstable();
        }
        g
    }

    /// True when every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n == other.n && self.edges().iter().all(|&(u, v)| other.has_edge(u, v))
    }

    /// A maximum clique, found by Bron–Kerbosch with pivoting.
    pub fn max_clique(&self) -> Vec<usize> {
        let adj = self.adjacency_bitsets();
        let mut best = Vec::new();
        let mut current = Vec::new();
        let mut p = FixedBitSet::with_capacity(self.n);
        p.insert_range(..);
        let x = FixedBitSet::with_capacity(self.n);
        bron_kerbosch(&adj, &mut current, p, x, &mut best);
        best.sort_unstable();
        best
    }

    /// Size of a maximum clique.
    pub fn clique_number(&self) -> usize {
        self.max_clique().len()
    }
}

fn bron_kerbosch(
    adj: &[FixedBitSet],
    current: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    best: &mut Vec<usize>,
) {
    let p_count = p.count_ones(..);
    if p_count == 0 {
        if x.count_ones(..) == 0 && current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    if current.len() + p_count <= best.len() {
        return;
    }
    let pivot = p.ones().chain(x.ones()).max_by_key(|&u| p.intersection(&adj[u]).count()).expect("p is nonempty");
    let candidates: Vec<usize> = p.ones().filter(|&v| !adj[pivot].contains(v)).collect();
    for v in candidates {
        let mut np = p.clone();
        np.intersect_with(&adj[v]);
        let mut nx = x.clone();
        nx.intersect_with(&adj[v]);
        current.push(v);
        bron_kerbosch(adj, current, np, nx, best);
        current.pop();
        p.set(v, false);
        x.insert(v);
    }
}
