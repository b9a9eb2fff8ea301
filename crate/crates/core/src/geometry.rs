//! Contact, crossing and pointed contact graphs; hyperplane trees of
//! two-dimensional complexes; footprints, imprints and their colouring.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::colouring::basic::Colouring;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Label of a contact-graph edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ContactKind {
    /// All four quarter-spaces are nonempty.
    Cross,
    /// Carriers meet but the hyperplanes do not cross.
    Osculate,
}

/// A graph on hyperplane ids with labelled edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactGraph {
    /// Number of hyperplanes.
    pub nodes: usize,
    /// Sorted edges `(h, h', kind)` with `h < h'`.
    pub edges: Vec<(usize, usize, ContactKind)>,
    /// Basepoint for pointed contact graphs.
    pub basepoint: Option<usize>,
}

impl ContactGraph {
    /// Unlabelled graph on the same nodes.
    pub fn graph(&self) -> SimpleGraph {
        let e: Vec<_> = self.edges.iter().map(|&(a, b, _)| (a, b)).collect();
        SimpleGraph::new(self.nodes, &e).expect("contact edges are simple")
    }

    /// Subgraph of crossing edges.
    pub fn crossing_graph(&self) -> SimpleGraph {
        let e: Vec<_> = self.edges.iter().filter(|e| e.2 == ContactKind::Cross).map(|&(a, b, _)| (a, b)).collect();
        SimpleGraph::new(self.nodes, &e).expect("contact edges are simple")
    }

    /// True when `(a, b)` is an edge of any kind.
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search_by(|e| (e.0, e.1).cmp(&key)).is_ok()
    }

    /// Graphviz text with crossing edges solid and osculations dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph contact {\n");
        for h in 0..self.nodes {
            let _ = writeln!(s, "  {h};");
        }
        for &(a, b, kind) in &self.edges {
            match kind {
                ContactKind::Cross => {
                    let _ = writeln!(s, "  {a} -- {b};");
                }
                ContactKind::Osculate => {
                    let _ = writeln!(s, "  {a} -- {b} [style=dashed];");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// True when all four quarter-spaces of `h1` and `h2` are nonempty.
pub fn crosses(c: &Complex, h1: usize, h2: usize) -> bool {
    c.crosses(h1, h2)
}

/// Contact graph of `c`, checked against `ω(Γ) = Δ`.
pub fn contact_graph(c: &Complex) -> Result<ContactGraph> {
    let mut edges = Vec::new();
    for a in 0..c.m() {
        for b in c.contact_row(a).ones().filter(|&b| b > a) {
            let kind = if c.crosses(a, b) { ContactKind::Cross } else { ContactKind::Osculate };
            edges.push((a, b, kind));
        }
    }
    let g = ContactGraph { nodes: c.m(), edges, basepoint: None };
    let clique = g.graph().clique_number();
    let degree = c.graph().graph().max_degree();
    if clique != degree {
        return Err(Error::CliqueDegreeMismatch { clique, degree });
    }
    Ok(g)
}

/// Pointed contact graph: crossings plus osculations realised by two edges
/// leaving a common vertex away from `v`.
pub fn pointed_contact_graph(c: &Complex, v: usize) -> Result<ContactGraph> {
    if v >= c.n() {
        return Err(Error::UnknownVertex(v));
    }
    let mut keep = vec![std::collections::BTreeSet::new(); c.m()];
    for x in 0..c.n() {
        let dx = c.dist(v, x);
        let outgoing: Vec<usize> = c
            .graph()
            .neighbours(x)
            .iter()
            .filter(|&&y| c.dist(v, y) == dx + 1)
            .map(|&y| c.edge_hyperplane(x, y).expect("neighbours span an edge"))
            .collect();
        for (i, &a) in outgoing.iter().enumerate() {
            for &b in &outgoing[i + 1..] {
                keep[a.min(b)].insert(a.max(b));
            }
        }
    }
    let mut edges = Vec::new();
    for a in 0..c.m() {
        for b in c.contact_row(a).ones().filter(|&b| b > a) {
            if c.crosses(a, b) {
                edges.push((a, b, ContactKind::Cross));
            } else if keep[a].contains(&b) {
                edges.push((a, b, ContactKind::Osculate));
            }
        }
    }
    Ok(ContactGraph { nodes: c.m(), edges, basepoint: Some(v) })
}

/// Choice of root for a hyperplane tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootPolicy {
    /// The tree vertex with the smallest index, i.e. the smallest class edge.
    #[default]
    MinId,
    /// A given tree vertex.
    Vertex(usize),
}

/// The tree whose vertices are the edges of a Θ-class, adjacent when opposite
/// in a square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneTree {
    /// Hyperplane id.
    pub hyperplane: usize,
    /// Tree vertices: the class edges in sorted order.
    pub vertices: Vec<(usize, usize)>,
    /// Sorted tree edges between vertex indices.
    pub edges: Vec<(usize, usize)>,
    /// Root vertex index.
    pub root: usize,
    adj: Vec<Vec<usize>>,
    depth: Vec<usize>,
    dist: Vec<u32>,
    proj: Vec<usize>,
}

impl HyperplaneTree {
    /// Number of tree vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// True for a tree without vertices, which never occurs for a real hyperplane.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Depth of tree vertex `t` below the root.
    pub fn depth(&self, t: usize) -> usize {
        self.depth[t]
    }

    /// Tree distance between two tree vertices.
    pub fn dist(&self, s: usize, t: usize) -> usize {
        self.dist[s * self.len() + t] as usize
    }

    /// Tree distance between two vertex sets.
    pub fn set_dist(&self, a: &[usize], b: &[usize]) -> usize {
        a.iter().flat_map(|&s| b.iter().map(move |&t| (s, t))).map(|(s, t)| self.dist(s, t)).min().unwrap_or(usize::MAX)
    }

    /// Tree neighbours of `t`.
    pub fn neighbours(&self, t: usize) -> &[usize] {
        &self.adj[t]
    }

    /// Tree vertex of the class edge incident to the complex vertex `x`.
    pub fn project(&self, x: usize) -> Option<usize> {
        self.proj.get(x).copied().filter(|&t| t != usize::MAX)
    }

    /// True when `set` is nonempty and induces a connected subtree.
    pub fn is_subtree(&self, set: &[usize]) -> bool {
        let Some(&first) = set.first() else { return false };
        let mut inside = vec![false; self.len()];
        for &t in set {
            inside[t] = true;
        }
        let mut seen = vec![false; self.len()];
        seen[first] = true;
        let mut stack = vec![first];
        let mut count = 1;
        while let Some(t) = stack.pop() {
            for &u in &self.adj[t] {
                if inside[u] && !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        let mut distinct = set.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        count == distinct.len()
    }

    /// Vertex of `set` closest to the root, ties by index.
    pub fn top(&self, set: &[usize]) -> Option<usize> {
        set.iter().copied().min_by_key(|&t| (self.depth[t], t))
    }
}

/// Builds the square-adjacency tree of hyperplane `h`.
pub fn hyperplane_tree(c: &Complex, h: usize, policy: RootPolicy) -> Result<HyperplaneTree> {
    let hp = c.hyperplane(h);
    let vertices = hp.edges.clone();
    let k = vertices.len();
    let mut proj = vec![usize::MAX; c.n()];
    for (i, &(a, b)) in vertices.iter().enumerate() {
        proj[a] = i;
        proj[b] = i;
    }
    let mut edges = Vec::new();
    for (i, &(a, b)) in vertices.iter().enumerate() {
        for &a2 in c.graph().neighbours(a) {
            let j = proj[a2];
            if a2 == b || j == usize::MAX || j <= i {
                continue;
            }
            let (x, y) = vertices[j];
            let b2 = if x == a2 { y } else { x };
            if c.graph().graph().has_edge(b, b2) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let mut adj = vec![Vec::new(); k];
    for &(i, j) in &edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let root = match policy {
        RootPolicy::MinId => 0,
        RootPolicy::Vertex(r) if r < k => r,
        RootPolicy::Vertex(r) => return Err(Error::UnknownVertex(r)),
    };
    let bfs = |s: usize| {
        let mut d = vec![u32::MAX; k];
        d[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(t) = q.pop_front() {
            for &u in &adj[t] {
                if d[u] == u32::MAX {
                    d[u] = d[t] + 1;
                    q.push_back(u);
                }
            }
        }
        d
    };
    if edges.len() + 1 != k || bfs(root).contains(&u32::MAX) {
        return Err(Error::NotATree(h));
    }
    let mut dist = Vec::with_capacity(k * k);
    for s in 0..k {
        dist.extend(bfs(s));
    }
    let depth = (0..k).map(|t| dist[root * k + t] as usize).collect();
    Ok(HyperplaneTree { hyperplane: h, vertices, edges, root, adj, depth, dist, proj })
}

/// Vertex set `N(H) ∩ N(V)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Footprint {
    /// Hyperplane `H`.
    pub owner: usize,
    /// Hyperplane `V`.
    pub host: usize,
    /// Sorted complex vertices.
    pub vertices: Vec<usize>,
}

/// Projection of a footprint onto the tree of its host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Imprint {
    /// Hyperplane `H`.
    pub owner: usize,
    /// Hyperplane `V`.
    pub host: usize,
    /// Sorted tree vertices of `V`.
    pub tree_vertices: Vec<usize>,
}

/// Footprint of `h` on `v`.
pub fn footprint(c: &Complex, h: usize, v: usize) -> Result<Footprint> {
    if h == v || !c.contacts(h, v) {
        return Err(Error::NotInContact(h, v));
    }
    let vertices = c.carrier_set(h).intersection(c.carrier_set(v)).collect();
    Ok(Footprint { owner: h, host: v, vertices })
}

/// Imprint of `h` on the hyperplane of `tree`.
pub fn imprint(c: &Complex, tree: &HyperplaneTree, h: usize) -> Result<Imprint> {
    let f = footprint(c, h, tree.hyperplane)?;
    let mut tree_vertices: Vec<usize> =
        f.vertices.iter().map(|&x| tree.project(x).expect("footprint lies in the carrier")).collect();
    tree_vertices.sort_unstable();
    tree_vertices.dedup();
    Ok(Imprint { owner: h, host: tree.hyperplane, tree_vertices })
}

fn sorted_meet(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// True when two imprints share a tree vertex.
pub fn imprints_meet(a: &Imprint, b: &Imprint) -> bool {
    sorted_meet(&a.tree_vertices, &b.tree_vertices)
}

/// Proper colouring of the intersection graph of a subtree family.
///
/// Members are coloured greedily by the depth of their top vertex, then by
/// position in `family`, which uses exactly the maximum load of a tree vertex.
/// The result is indexed like `family`.
pub fn colour_imprints(tree: &HyperplaneTree, family: &[Imprint], delta: usize) -> Result<Colouring> {
    let bound = (2 * delta).max(1);
    let mut load = vec![0usize; tree.len()];
    for im in family {
        for &t in &im.tree_vertices {
            load[t] += 1;
        }
    }
    if let Some(&worst) = load.iter().max() {
        if worst > bound {
            return Err(Error::DegreeExceeded { host: tree.hyperplane, load: worst, bound });
        }
    }
    let mut order: Vec<usize> = (0..family.len()).collect();
    order.sort_by_key(|&i| {
        let top = tree.top(&family[i].tree_vertices).map_or(usize::MAX, |t| tree.depth(t));
        (top, i)
    });
    let mut colours = vec![usize::MAX; family.len()];
    for (pos, &i) in order.iter().enumerate() {
        let mut used: Vec<usize> =
            order[..pos].iter().filter(|&&j| imprints_meet(&family[i], &family[j])).map(|&j| colours[j]).collect();
        used.sort_unstable();
        used.dedup();
        colours[i] = (0..).find(|c| used.binary_search(c).is_err()).expect("free colour");
    }
    Ok(Colouring::from_vec(colours))
}

/// A two-dimensional complex with the trees of all its hyperplanes.
#[derive(Debug, Clone)]
pub struct TwoComplex {
    complex: Complex,
    trees: Vec<HyperplaneTree>,
    delta: usize,
}

impl TwoComplex {
    /// Checks two-dimensionality and builds every hyperplane tree.
    pub fn new(complex: Complex) -> Result<Self> {
        if !complex.is_two_dimensional() {
            return Err(Error::NotTwoDimensional);
        }
        let trees =
            (0..complex.m()).map(|h| hyperplane_tree(&complex, h, RootPolicy::MinId)).collect::<Result<Vec<_>>>()?;
        let delta = complex.graph().graph().max_degree();
        Ok(TwoComplex { complex, trees, delta })
    }

    /// Underlying complex.
    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    /// Tree of hyperplane `h`.
    pub fn tree(&self, h: usize) -> &HyperplaneTree {
        &self.trees[h]
    }

    /// Maximum degree Δ.
    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Imprint of `h` on `v`.
    pub fn imprint(&self, h: usize, v: usize) -> Result<Imprint> {
        imprint(&self.complex, &self.trees[v], h)
    }
}
