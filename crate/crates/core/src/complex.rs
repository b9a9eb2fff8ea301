//! Hyperplanes of a median graph and the complex built on them.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::median::{class_sides, edge_classes, MedianGraph, TRIPLE_CHECK_LIMIT};

/// A Θ-class of edges together with its halfspaces and carrier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperplane {
    /// Index of the hyperplane; classes are numbered by their smallest edge.
    pub id: usize,
    /// Edges of the class as `(min, max)` pairs, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Sorted halfspace containing the smaller endpoint of the first edge.
    pub half_a: Vec<usize>,
    /// Sorted complementary halfspace.
    pub half_b: Vec<usize>,
    /// Sorted endpoints of the class edges.
    pub carrier: Vec<usize>,
}

/// Degree data of a complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexStats {
    /// Maximum vertex degree Δ.
    pub max_degree: usize,
    /// Maximum number of edges leaving a vertex away from the basepoint.
    pub max_out_degree: Option<usize>,
    /// Clique number of the crossing graph.
    pub dimension: usize,
}

/// Partitions the edges of `g` into Θ-classes.
///
/// Each class must split `g` into two parts with every class edge crossing.
/// Every edge is tested against the first edge of its class with the
/// distance criterion `d(u,x) + d(v,y) ≠ d(u,y) + d(v,x)`, and on graphs
/// small enough both halves are checked for convexity.
pub fn theta_classes(g: &MedianGraph) -> Result<Vec<Hyperplane>> {
    let graph = g.graph();
    let (edges, class, count) = edge_classes(graph);
    let sides = class_sides(graph, &edges, &class, count).map_err(|(c, msg)| Error::InconsistentSplit(c, msg))?;
    let mut members = vec![Vec::new(); count];
    for (e, &c) in class.iter().enumerate() {
        members[c].push(edges[e]);
    }
    for (c, list) in members.iter().enumerate() {
        let (u, v) = list[0];
        let du = graph.bfs(u);
        let dv = graph.bfs(v);
        for (e, &(x, y)) in edges.iter().enumerate() {
            let related = du[x] + dv[y] != du[y] + dv[x];
            if related != (class[e] == c) {
                return Err(Error::InconsistentSplit(
                    c,
                    format!("edge ({x}, {y}) disagrees with the distance criterion"),
                ));
            }
        }
    }
    let n = g.n();
    let mut out = Vec::with_capacity(count);
    for (c, list) in members.into_iter().enumerate() {
        let half_b: Vec<usize> = sides[c].ones().collect();
        let half_a: Vec<usize> = (0..n).filter(|&v| !sides[c].contains(v)).collect();
        if n <= TRIPLE_CHECK_LIMIT && !(g.is_convex(&half_a) && g.is_convex(&half_b)) {
            return Err(Error::InconsistentSplit(c, "a halfspace is not convex".into()));
        }
        let mut carrier: Vec<usize> = list.iter().flat_map(|&(a, b)| [a, b]).collect();
        carrier.sort_unstable();
        carrier.dedup();
        out.push(Hyperplane { id: c, edges: list, half_a, half_b, carrier });
    }
    Ok(out)
}

/// A median graph with its hyperplanes and precomputed incidence bitsets.
#[derive(Debug, Clone)]
pub struct Complex {
    graph: MedianGraph,
    hyperplanes: Vec<Hyperplane>,
    edge_list: Vec<(usize, usize)>,
    edge_class: Vec<usize>,
    side_b: Vec<FixedBitSet>,
    carrier: Vec<FixedBitSet>,
    labels: Vec<FixedBitSet>,
    crossing: Vec<FixedBitSet>,
    contact: Vec<FixedBitSet>,
}

impl Complex {
    /// Extracts hyperplanes and incidence data from a median graph.
    pub fn new(graph: MedianGraph) -> Result<Self> {
        let hyperplanes = theta_classes(&graph)?;
        Ok(Complex::from_parts(graph, hyperplanes))
    }

    fn from_parts(graph: MedianGraph, hyperplanes: Vec<Hyperplane>) -> Self {
        let n = graph.n();
        let m = hyperplanes.len();
        let edge_list = graph.edges();
        let mut edge_class = vec![0; edge_list.len()];
        for h in &hyperplanes {
            for e in &h.edges {
                let i = edge_list.binary_search(e).expect("class edge exists");
                edge_class[i] = h.id;
            }
        }
        let bits = |list: &[usize]| {
            let mut b = FixedBitSet::with_capacity(n);
            for &v in list {
                b.insert(v);
            }
            b
        };
        let side_b: Vec<FixedBitSet> = hyperplanes.iter().map(|h| bits(&h.half_b)).collect();
        let carrier: Vec<FixedBitSet> = hyperplanes.iter().map(|h| bits(&h.carrier)).collect();
        let mut labels = vec![FixedBitSet::with_capacity(m); n];
        for (h, s) in side_b.iter().enumerate() {
            for v in s.ones() {
                labels[v].insert(h);
            }
        }
        let mut crossing = vec![FixedBitSet::with_capacity(m); m];
        let mut contact = vec![FixedBitSet::with_capacity(m); m];
        let mut side_a = Vec::with_capacity(m);
        for s in &side_b {
            let mut a = FixedBitSet::with_capacity(n);
            a.insert_range(..);
            a.difference_with(s);
            side_a.push(a);
        }
        for i in 0..m {
            for j in i + 1..m {
                let cross = !side_a[i].is_disjoint(&side_a[j])
                    && !side_a[i].is_disjoint(&side_b[j])
                    && !side_b[i].is_disjoint(&side_a[j])
                    && !side_b[i].is_disjoint(&side_b[j]);
                if cross {
                    crossing[i].insert(j);
                    crossing[j].insert(i);
                }
                if !carrier[i].is_disjoint(&carrier[j]) {
                    contact[i].insert(j);
                    contact[j].insert(i);
                }
            }
        }
        Complex { graph, hyperplanes, edge_list, edge_class, side_b, carrier, labels, crossing, contact }
    }

    /// The underlying median graph.
    pub fn graph(&self) -> &MedianGraph {
        &self.graph
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Number of hyperplanes.
    pub fn m(&self) -> usize {
        self.hyperplanes.len()
    }

    /// All hyperplanes, indexed by id.
    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// Hyperplane `h`.
    pub fn hyperplane(&self, h: usize) -> &Hyperplane {
        &self.hyperplanes[h]
    }

    /// Hyperplane dual to the edge `{u, v}`, if it is an edge.
    pub fn edge_hyperplane(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_list.binary_search(&(u.min(v), u.max(v))).ok().map(|i| self.edge_class[i])
    }

    /// True when `v` lies in the halfspace `half_b` of `h`.
    pub fn in_half_b(&self, h: usize, v: usize) -> bool {
        self.side_b[h].contains(v)
    }

    /// Halfspace `half_b` of `h` as a bitset over vertices.
    pub fn half_b_set(&self, h: usize) -> &FixedBitSet {
        &self.side_b[h]
    }

    /// Carrier of `h` as a bitset over vertices.
    pub fn carrier_set(&self, h: usize) -> &FixedBitSet {
        &self.carrier[h]
    }

    /// Hyperplanes whose `half_b` contains `v`.
    pub fn label(&self, v: usize) -> &FixedBitSet {
        &self.labels[v]
    }

    /// Distance as the number of separating hyperplanes.
    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.labels[u].symmetric_difference(&self.labels[v]).count()
    }

    /// True when `h1` and `h2` cross.
    pub fn crosses(&self, h1: usize, h2: usize) -> bool {
        self.crossing[h1].contains(h2)
    }

    /// True when the carriers of distinct `h1` and `h2` meet.
    pub fn contacts(&self, h1: usize, h2: usize) -> bool {
        self.contact[h1].contains(h2)
    }

    /// True when `h1` and `h2` contact without crossing.
    pub fn osculates(&self, h1: usize, h2: usize) -> bool {
        self.contacts(h1, h2) && !self.crosses(h1, h2)
    }

    /// Hyperplanes crossing `h`.
    pub fn crossing_row(&self, h: usize) -> &FixedBitSet {
        &self.crossing[h]
    }

    /// Hyperplanes contacting `h`.
    pub fn contact_row(&self, h: usize) -> &FixedBitSet {
        &self.contact[h]
    }

    /// Side of `w` containing the whole carrier of `h`, if there is one.
    pub fn carrier_side(&self, w: usize, h: usize) -> Option<bool> {
        let c = &self.carrier[h];
        if c.is_subset(&self.side_b[w]) {
            Some(true)
        } else if c.is_disjoint(&self.side_b[w]) {
            Some(false)
        } else {
            None
        }
    }

    /// True when `w` separates the carrier of `h` from the carrier of `u`.
    pub fn separates(&self, w: usize, h: usize, u: usize) -> bool {
        if w == h || w == u {
            return false;
        }
        matches!(
            (self.carrier_side(w, h), self.carrier_side(w, u)),
            (Some(a), Some(b)) if a != b
        )
    }

    /// True when `w` separates the carrier of `h` from the vertex `v`.
    pub fn separates_from_vertex(&self, w: usize, h: usize, v: usize) -> bool {
        w != h && matches!(self.carrier_side(w, h), Some(s) if s != self.in_half_b(w, v))
    }

    /// Crossing graph on hyperplane ids.
    pub fn crossing_graph(&self) -> SimpleGraph {
        bitset_graph(&self.crossing)
    }

    /// Contact graph on hyperplane ids, without edge labels.
    pub fn contact_simple_graph(&self) -> SimpleGraph {
        bitset_graph(&self.contact)
    }

    /// True when no three hyperplanes pairwise cross.
    pub fn is_two_dimensional(&self) -> bool {
        (0..self.m()).all(|i| {
            self.crossing[i].ones().filter(|&j| j > i).all(|j| self.crossing[i].is_disjoint(&self.crossing[j]))
        })
    }

    /// Number of edges leaving `v` away from `base`.
    pub fn out_degree(&self, base: usize, v: usize) -> usize {
        let d = self.dist(base, v);
        self.graph.neighbours(v).iter().filter(|&&w| self.dist(base, w) == d + 1).count()
    }

    /// Degree statistics; `max_out_degree` uses the basepoint when present.
    pub fn stats(&self) -> ComplexStats {
        let max_out_degree =
            self.graph.basepoint().map(|b| (0..self.n()).map(|v| self.out_degree(b, v)).max().unwrap_or(0));
        ComplexStats {
            max_degree: self.graph.graph().max_degree(),
            max_out_degree,
            dimension: self.crossing_graph().clique_number().max(usize::from(self.m() > 0)),
        }
    }

    /// BFS distances from `src` inside the subgraph induced by `allowed`.
    pub fn bfs_within(&self, src: usize, allowed: &FixedBitSet) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &w in self.graph.neighbours(u) {
                if allowed.contains(w) && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

fn bitset_graph(rows: &[FixedBitSet]) -> SimpleGraph {
    let mut edges = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for j in row.ones() {
            if i < j {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(rows.len(), &edges).expect("rows are symmetric and loop-free")
}
