//! Median graphs: distances, intervals, medians, convexity, gates and
//! recognition.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::dual::dual_graph;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, UNREACHABLE};

/// Largest vertex count for which recognition enumerates all triples.
pub const TRIPLE_CHECK_LIMIT: usize = 400;

/// A connected graph on `0..n`, optionally pointed.
///
/// Construction checks connectivity and simplicity only. Use
/// [`MedianGraph::validated`] or [`is_median_graph`] to certify medianity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MedianGraph {
    graph: SimpleGraph,
    basepoint: Option<usize>,
}

impl MedianGraph {
    /// Builds a connected graph from an edge list.
    pub fn new(n: usize, edges: &[(usize, usize)], basepoint: Option<usize>) -> Result<Self> {
        MedianGraph::from_graph(SimpleGraph::new(n, edges)?, basepoint)
    }

    /// Wraps a simple graph after checking it is nonempty and connected.
    pub fn from_graph(graph: SimpleGraph, basepoint: Option<usize>) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::InvalidInput("graph has no vertices".into()));
        }
        if !graph.is_connected() {
            return Err(Error::InvalidInput("graph is disconnected".into()));
        }
        if let Some(b) = basepoint {
            if b >= graph.n() {
                return Err(Error::UnknownVertex(b));
            }
        }
        Ok(MedianGraph { graph, basepoint })
    }

    /// Builds the graph and certifies that it is median.
    pub fn validated(n: usize, edges: &[(usize, usize)], basepoint: Option<usize>) -> Result<Self> {
        let g = MedianGraph::new(n, edges, basepoint)?;
        is_median_graph(g.graph()).into_result()?;
        Ok(g)
    }

    /// Underlying simple graph.
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Sorted canonical edge list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    /// Sorted neighbours of `v`.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        self.graph.neighbours(v)
    }

    /// Optional basepoint.
    pub fn basepoint(&self) -> Option<usize> {
        self.basepoint
    }

    /// Same graph with a different basepoint.
    pub fn with_basepoint(&self, basepoint: Option<usize>) -> Result<Self> {
        MedianGraph::from_graph(self.graph.clone(), basepoint)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Graph distance by BFS.
    pub fn dist(&self, u: usize, v: usize) -> Result<usize> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.graph.bfs(u)[v])
    }

    /// Sorted vertex set of the interval `I(u, v)`.
    pub fn interval(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check(u)?;
        self.check(v)?;
        let du = self.graph.bfs(u);
        let dv = self.graph.bfs(v);
        Ok((0..self.n()).filter(|&x| du[x] + dv[x] == du[v]).collect())
    }

    /// The unique vertex of `I(u,v) ∩ I(u,w) ∩ I(v,w)`.
    pub fn median(&self, u: usize, v: usize, w: usize) -> Result<usize> {
        self.check(u)?;
        self.check(v)?;
        self.check(w)?;
        let du = self.graph.bfs(u);
        let dv = self.graph.bfs(v);
        let dw = self.graph.bfs(w);
        let found: Vec<usize> = (0..self.n())
            .filter(|&x| du[x] + dv[x] == du[v] && du[x] + dw[x] == du[w] && dv[x] + dw[x] == dv[w])
            .collect();
        if found.len() == 1 {
            Ok(found[0])
        } else {
            Err(Error::NotMedian(u, v, w, found.len()))
        }
    }

    /// True when `set` induces a connected subgraph closed under intervals.
    pub fn is_convex(&self, set: &[usize]) -> bool {
        if set.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let mut inside = FixedBitSet::with_capacity(self.n());
        for &v in set {
            inside.insert(v);
        }
        let members: Vec<usize> = inside.ones().collect();
        if members.len() <= 1 {
            return true;
        }
        if !self.graph.induced(&members).is_connected() {
            return false;
        }
        let dist: Vec<Vec<usize>> = members.iter().map(|&s| self.graph.bfs(s)).collect();
        for (i, di) in dist.iter().enumerate() {
            for (j, dj) in dist.iter().enumerate().skip(i + 1) {
                let t = members[j];
                if (0..self.n()).any(|x| !inside.contains(x) && di[x] + dj[x] == di[t]) {
                    return false;
                }
            }
        }
        true
    }

    /// The gate of `v` in `set`: the unique `s` with `d(v,y) = d(v,s) + d(s,y)` for all `y ∈ set`.
    pub fn gate(&self, set: &[usize], v: usize) -> Result<usize> {
        self.check(v)?;
        for &s in set {
            self.check(s)?;
        }
        let dv = self.graph.bfs(v);
        let mut witnesses = set.iter().copied().filter(|&s| {
            let ds = self.graph.bfs(s);
            set.iter().all(|&y| dv[y] == dv[s] + ds[y])
        });
        match (witnesses.next(), witnesses.next()) {
            (Some(s), None) => Ok(s),
            _ => Err(Error::NotGated(v)),
        }
    }
}

/// All-pairs distances stored as a dense `n × n` table.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    data: Vec<u32>,
}

impl DistanceTable {
    /// Runs BFS from every vertex.
    pub fn new(g: &SimpleGraph) -> Self {
        let n = g.n();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            data.extend(g.bfs(s).into_iter().map(|d| if d == UNREACHABLE { u32::MAX } else { d as u32 }));
        }
        DistanceTable { n, data }
    }

    /// Distance between `u` and `v`.
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.data[u * self.n + v] as usize
    }
}

/// Outcome of median-graph recognition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MedianCheck {
    /// Every triple has a unique median.
    Median,
    /// Recognition failed.
    NotMedian {
        /// A triple without a unique median, when one was located.
        triple: Option<(usize, usize, usize)>,
        /// Number of medians of that triple.
        medians: usize,
        /// Short description of the failure.
        reason: String,
    },
}

impl MedianCheck {
    /// True for [`MedianCheck::Median`].
    pub fn is_median(&self) -> bool {
        matches!(self, MedianCheck::Median)
    }

    /// Converts a failure into an [`Error`].
    pub fn into_result(self) -> Result<()> {
        match self {
            MedianCheck::Median => Ok(()),
            MedianCheck::NotMedian { triple: Some((u, v, w)), medians, .. } => Err(Error::NotMedian(u, v, w, medians)),
            MedianCheck::NotMedian { reason, .. } => Err(Error::NotMedianStructure(reason)),
        }
    }
}

fn structural_failure(reason: impl Into<String>) -> MedianCheck {
    MedianCheck::NotMedian { triple: None, medians: 0, reason: reason.into() }
}

/// Decides whether `g` is a median graph.
///
/// Graphs with at most [`TRIPLE_CHECK_LIMIT`] vertices are checked by triple
/// enumeration and report a counterexample triple. Larger graphs are checked
/// structurally: the Θ-classes must split the graph into two sides each, the
/// induced labelling must be injective, and the dual of the resulting walls
/// must have exactly as many vertices and edges as `g`, which makes `g`
/// isomorphic to a median graph.
pub fn is_median_graph(g: &SimpleGraph) -> MedianCheck {
    if g.n() == 0 {
        return structural_failure("empty graph");
    }
    if !g.is_connected() {
        return structural_failure("graph is disconnected");
    }
    if g.n() <= TRIPLE_CHECK_LIMIT {
        median_by_triples(g)
    } else {
        median_by_structure(g)
    }
}

/// Triple enumeration over interval bitsets.
pub fn median_by_triples(g: &SimpleGraph) -> MedianCheck {
    let n = g.n();
    let dist = DistanceTable::new(g);
    let mut intervals = vec![FixedBitSet::with_capacity(n); n * n];
    for u in 0..n {
        for v in u..n {
            let duv = dist.get(u, v);
            let mut b = FixedBitSet::with_capacity(n);
            for x in 0..n {
                if dist.get(u, x) + dist.get(x, v) == duv {
                    b.insert(x);
                }
            }
            intervals[v * n + u] = b.clone();
            intervals[u * n + v] = b;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let iuv = &intervals[u * n + v];
            for w in v + 1..n {
                let mut common = iuv.clone();
                common.intersect_with(&intervals[u * n + w]);
                common.intersect_with(&intervals[v * n + w]);
                let count = common.count_ones(..);
                if count != 1 {
                    return MedianCheck::NotMedian {
                        triple: Some((u, v, w)),
                        medians: count,
                        reason: format!("triple ({u}, {v}, {w}) has {count} medians"),
                    };
                }
            }
        }
    }
    MedianCheck::Median
}

/// Edges in canonical order, the class index of every edge and the class count.
///
/// Classes are the transitive closure of "opposite in a 4-cycle" and are
/// numbered by their smallest edge.
pub fn edge_classes(g: &SimpleGraph) -> (Vec<(usize, usize)>, Vec<usize>, usize) {
    let edges = g.edges();
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (e, &(u, v)) in edges.iter().enumerate() {
        for &a in g.neighbours(u) {
            if a == v {
                continue;
            }
            for &b in g.neighbours(v) {
                if b == u || b == a || !g.has_edge(a, b) {
                    continue;
                }
                let f = index[&(a.min(b), a.max(b))];
                let (ra, rb) = (find(&mut parent, e), find(&mut parent, f));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut class_of_root = HashMap::new();
    let mut class = vec![0; edges.len()];
    for e in 0..edges.len() {
        let r = find(&mut parent, e);
        let next = class_of_root.len();
        class[e] = *class_of_root.entry(r).or_insert(next);
    }
    let count = class_of_root.len();
    (edges, class, count)
}

/// Side `1` of each class: the vertices not reachable from the smaller
/// endpoint of the class's first edge once the class is deleted.
///
/// Returns an error message when a class does not split the graph into
/// exactly two parts with every class edge going across.
pub(crate) fn class_sides(
    g: &SimpleGraph,
    edges: &[(usize, usize)],
    class: &[usize],
    count: usize,
) -> std::result::Result<Vec<FixedBitSet>, (usize, String)> {
    let n = g.n();
    let mut members = vec![Vec::new(); count];
    for (e, &c) in class.iter().enumerate() {
        members[c].push(e);
    }
    let edge_index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut sides = Vec::with_capacity(count);
    for (c, list) in members.iter().enumerate() {
        let reach = |start: usize| {
            let mut seen = FixedBitSet::with_capacity(n);
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in g.neighbours(x) {
                    if seen.contains(y) || class[edge_index[&(x.min(y), x.max(y))]] == c {
                        continue;
                    }
                    seen.insert(y);
                    stack.push(y);
                }
            }
            seen
        };
        let (a0, b0) = edges[list[0]];
        let zero = reach(a0);
        if zero.contains(b0) {
            return Err((c, "deleting the class leaves it connected".into()));
        }
        let one = reach(b0);
        if zero.count_ones(..) + one.count_ones(..) != n {
            return Err((c, "deleting the class leaves more than two parts".into()));
        }
        for &e in list {
            let (u, v) = edges[e];
            if zero.contains(u) == zero.contains(v) {
                return Err((c, format!("class edge ({u}, {v}) does not cross the split")));
            }
        }
        sides.push(one);
    }
    Ok(sides)
}

/// Structural recognition through the dual of the Θ-class walls.
pub fn median_by_structure(g: &SimpleGraph) -> MedianCheck {
    if g.bipartition().is_err() {
        return structural_failure("graph is not bipartite");
    }
    let (edges, class, count) = edge_classes(g);
    let sides = match class_sides(g, &edges, &class, count) {
        Ok(s) => s,
        Err((c, msg)) => return structural_failure(format!("class {c}: {msg}")),
    };
    let distinct: HashSet<&FixedBitSet> = sides.iter().collect();
    if distinct.len() != sides.len() {
        return structural_failure("two classes induce the same split");
    }
    let label = |v: usize| {
        let mut b = FixedBitSet::with_capacity(count);
        for (c, s) in sides.iter().enumerate() {
            if s.contains(v) {
                b.insert(c);
            }
        }
        b
    };
    let labels: HashSet<FixedBitSet> = (0..g.n()).map(label).collect();
    if labels.len() != g.n() {
        return structural_failure("two vertices are separated by no class");
    }
    match dual_graph(&sides, g.n(), label(0), g.n()) {
        Ok(d) if d.orientations.len() == g.n() && d.edges.len() == g.edge_count() => MedianCheck::Median,
        Ok(d) => structural_failure(format!(
            "wall dual has {} vertices and {} edges, graph has {} and {}",
            d.orientations.len(),
            d.edges.len(),
            g.n(),
            g.edge_count()
        )),
        Err(_) => structural_failure("wall dual has more vertices than the graph"),
    }
}
