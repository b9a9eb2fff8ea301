//! Event structures with binary conflict, their domains, and nice labelings.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::colouring::ball::colour_contact_graph_default;
use crate::colouring::basic::{exact_colouring, greedy_colour};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::geometry::{pointed_contact_graph, TwoComplex};
use crate::graph::SimpleGraph;
use crate::median::{is_median_graph, MedianGraph};

/// Default cap on the number of configurations of a domain.
pub const DEFAULT_CONFIG_BUDGET: usize = 200_000;

/// An event structure on events `0..n`.
///
/// Causality is stored reflexively and transitively closed; conflict is
/// stored symmetrically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventStructure {
    le: Vec<FixedBitSet>,
    conflict: Vec<FixedBitSet>,
}

/// A broken axiom of an event structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// An event in conflict with itself.
    SelfConflict { event: usize },
    /// Distinct events below each other.
    CausalCycle { a: usize, b: usize },
    /// `a ⌣ b` and `b ≤ c` but not `a ⌣ c`.
    Propagation { a: usize, b: usize, c: usize },
}

impl EventStructure {
    /// Builds a structure from causal pairs `e ≤ e'` and conflict pairs.
    ///
    /// Causality is closed reflexively and transitively and conflict is
    /// symmetrised. The axioms are not checked; see [`validate`].
    pub fn new(n: usize, causality: &[(usize, usize)], conflict: &[(usize, usize)]) -> Result<Self> {
        let mut le = vec![FixedBitSet::with_capacity(n); n];
        let mut cf = vec![FixedBitSet::with_capacity(n); n];
        for (e, row) in le.iter_mut().enumerate() {
            row.insert(e);
        }
        for &(a, b) in causality.iter().chain(conflict) {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("pair ({a}, {b}) names an unknown event")));
            }
        }
        for &(a, b) in causality {
            le[a].insert(b);
        }
        for &(a, b) in conflict {
            cf[a].insert(b);
            cf[b].insert(a);
        }
        for k in 0..n {
            let row_k = le[k].clone();
            for row in le.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        Ok(EventStructure { le, conflict: cf })
    }

    /// Number of events.
    pub fn len(&self) -> usize {
        self.le.len()
    }

    /// True when there are no events.
    pub fn is_empty(&self) -> bool {
        self.le.is_empty()
    }

    /// True when `a ≤ b`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a].contains(b)
    }

    /// True when `a < b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    /// True when `a ⌣ b`.
    pub fn in_conflict(&self, a: usize, b: usize) -> bool {
        self.conflict[a].contains(b)
    }

    /// True when `a` and `b` are incomparable and not in conflict.
    pub fn concurrent(&self, a: usize, b: usize) -> bool {
        a != b && !self.le(a, b) && !self.le(b, a) && !self.in_conflict(a, b)
    }

    /// True when `a ⌣ b` and no other event below one of them conflicts with
    /// the other.
    pub fn minimal_conflict(&self, a: usize, b: usize) -> bool {
        self.in_conflict(a, b)
            && (0..self.len()).all(|e| {
                e == a
                    || e == b
                    || !((self.lt(e, a) && self.in_conflict(e, b)) || (self.lt(e, b) && self.in_conflict(e, a)))
            })
    }

    /// True when `a` and `b` are concurrent or in minimal conflict.
    pub fn independent(&self, a: usize, b: usize) -> bool {
        self.concurrent(a, b) || self.minimal_conflict(a, b)
    }

    /// Graph of independent pairs.
    pub fn independence_graph(&self) -> SimpleGraph {
        let n = self.len();
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| self.independent(a, b)).collect();
        SimpleGraph::new(n, &edges).expect("pairs are distinct")
    }

    /// Maximum size of a set of pairwise independent events.
    pub fn degree(&self) -> usize {
        self.independence_graph().clique_number()
    }

    /// Covering pairs `a < b` with nothing strictly between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in self.le[a].ones().filter(|&b| b != a) {
                if !(0..n).any(|c| c != a && c != b && self.le(a, c) && self.le(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Conflict pairs `a < b`.
    pub fn conflict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| self.conflict[a].ones().filter(move |&b| b > a).map(move |b| (a, b))).collect()
    }

    /// The structure with event `e` renamed `perm[e]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<EventStructure> {
        let map = |pairs: Vec<(usize, usize)>| -> Vec<(usize, usize)> {
            pairs.into_iter().map(|(a, b)| (perm[a], perm[b])).collect()
        };
        EventStructure::new(self.len(), &map(self.covering_pairs()), &map(self.conflict_pairs()))
    }

    /// Events in an order compatible with causality.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&e| ((0..self.len()).filter(|&d| self.le(d, e)).count(), e));
        order
    }
}

/// Lists every axiom violation; an empty list means the structure is valid.
pub fn validate(es: &EventStructure) -> Vec<Violation> {
    let n = es.len();
    let mut out = Vec::new();
    for e in 0..n {
        if es.in_conflict(e, e) {
            out.push(Violation::SelfConflict { event: e });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if es.le(a, b) && es.le(b, a) {
                out.push(Violation::CausalCycle { a, b });
            }
        }
    }
    for a in 0..n {
        for b in es.conflict[a].ones() {
            for c in es.le[b].ones() {
                if !es.in_conflict(a, c) {
                    out.push(Violation::Propagation { a, b, c });
                }
            }
        }
    }
    out
}

/// The domain of an event structure.
#[derive(Debug, Clone)]
pub struct Domain {
    /// The median graph of configurations, pointed at the empty configuration 0.
    pub graph: MedianGraph,
    /// Sorted events of each configuration, ordered by size then lexicographically.
    pub configurations: Vec<Vec<usize>>,
    /// Event of each hyperplane of the domain.
    pub hyperplane_event: Vec<usize>,
}

/// Enumerates configurations and joins those differing by one event.
///
/// Fails with [`Error::ConfigExplosion`] beyond `budget` configurations and
/// with [`Error::InvalidInput`] on an invalid structure.
pub fn domain(es: &EventStructure, budget: usize) -> Result<Domain> {
    if let Some(v) = validate(es).first() {
        return Err(Error::InvalidInput(format!("invalid event structure: {v:?}")));
    }
    let n = es.len();
    let order = es.linear_extension();
    let mut configs: Vec<FixedBitSet> = Vec::new();
    let mut stack = vec![(0usize, FixedBitSet::with_capacity(n))];
    while let Some((i, set)) = stack.pop() {
        if i == order.len() {
            if configs.len() == budget {
                return Err(Error::ConfigExplosion(budget));
            }
            configs.push(set);
            continue;
        }
        let e = order[i];
        let below_ok = (0..n).all(|d| !es.lt(d, e) || set.contains(d));
        let conflict_free = set.ones().all(|d| !es.in_conflict(d, e));
        if below_ok && conflict_free {
            let mut with = set.clone();
            with.insert(e);
            stack.push((i + 1, with));
        }
        stack.push((i + 1, set));
    }
    let mut configurations: Vec<Vec<usize>> = configs.iter().map(|c| c.ones().collect()).collect();
    configurations.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let index: HashMap<&[usize], usize> = configurations.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut edges = Vec::new();
    let mut edge_event = HashMap::new();
    for (i, c) in configurations.iter().enumerate() {
        for e in 0..n {
            if c.binary_search(&e).is_err() {
                let mut bigger = c.clone();
                bigger.insert(bigger.partition_point(|&x| x < e), e);
                if let Some(&j) = index.get(bigger.as_slice()) {
                    edges.push((i, j));
                    edge_event.insert((i, j), e);
                }
            }
        }
    }
    let graph = MedianGraph::new(configurations.len(), &edges, Some(0))?;
    is_median_graph(graph.graph())
        .into_result()
        .map_err(|e| Error::PostconditionFailed(format!("domain is not median: {e}")))?;
    let c = Complex::new(graph.clone())?;
    let mut hyperplane_event = vec![usize::MAX; c.m()];
    let mut seen = vec![false; n];
    for h in c.hyperplanes() {
        for &(u, v) in &h.edges {
            let e = edge_event[&(u.min(v), u.max(v))];
            if hyperplane_event[h.id] == usize::MAX {
                if std::mem::replace(&mut seen[e], true) {
                    return Err(Error::PostconditionFailed(format!("event {e} labels two hyperplanes")));
                }
                hyperplane_event[h.id] = e;
            } else if hyperplane_event[h.id] != e {
                return Err(Error::PostconditionFailed(format!("hyperplane {} carries two events", h.id)));
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::PostconditionFailed("some event labels no hyperplane".into()));
    }
    Ok(Domain { graph, configurations, hyperplane_event })
}

/// The event structure of a complex pointed at `v`: events are hyperplanes,
/// `H ≤ H'` when `H` separates `H'` from `v`, and non-crossing hyperplanes
/// are in conflict when neither separates the other from `v`.
pub fn from_pointed_complex(c: &Complex, v: usize) -> Result<EventStructure> {
    if v >= c.n() {
        return Err(Error::UnknownVertex(v));
    }
    let m = c.m();
    let mut causality = Vec::new();
    let mut conflict = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            if c.separates_from_vertex(a, b, v) {
                causality.push((a, b));
            } else if a < b && !c.crosses(a, b) && !c.separates_from_vertex(b, a, v) {
                conflict.push((a, b));
            }
        }
    }
    EventStructure::new(m, &causality, &conflict)
}

/// Certifies that the domain of the structure of `(c, v)` is `c` pointed at
/// `v`: each vertex maps to the hyperplanes separating it from `v`, and this
/// map must be a graph isomorphism onto the domain sending `v` to `∅`.
/// Returns the vertex map.
pub fn round_trip_certificate(c: &Complex, v: usize, budget: usize) -> Result<Vec<usize>> {
    let es = from_pointed_complex(c, v)?;
    let d = domain(&es, budget)?;
    let fail = |msg: String| Error::PostconditionFailed(msg);
    if d.configurations.len() != c.n() {
        return Err(fail(format!("domain has {} vertices, complex has {}", d.configurations.len(), c.n())));
    }
    let index: HashMap<&[usize], usize> = d.configurations.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut map = Vec::with_capacity(c.n());
    for x in 0..c.n() {
        let mut sep = c.label(x).clone();
        sep.symmetric_difference_with(c.label(v));
        let set: Vec<usize> = sep.ones().collect();
        let &id = index.get(set.as_slice()).ok_or_else(|| fail(format!("vertex {x} is not a configuration")))?;
        map.push(id);
    }
    let mut hit = vec![false; c.n()];
    for &id in &map {
        if std::mem::replace(&mut hit[id], true) {
            return Err(fail("two vertices share a configuration".into()));
        }
    }
    if map[v] != 0 {
        return Err(fail("basepoint is not the empty configuration".into()));
    }
    for (x, y) in c.graph().edges() {
        if !d.graph.graph().has_edge(map[x], map[y]) {
            return Err(fail(format!("edge ({x}, {y}) is not preserved")));
        }
    }
    if c.graph().edges().len() != d.graph.edges().len() {
        return Err(fail("edge counts differ".into()));
    }
    Ok(map)
}

/// Colouring method behind a nice labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelMethod {
    /// The contact-graph pipeline; needs a two-dimensional domain.
    Theorem1,
    /// Greedy colouring in event order.
    Greedy,
    /// The exact oracle.
    Exact,
}

/// A labeling of events.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    /// Label of each event.
    pub labels: Vec<usize>,
    /// Number of distinct labels.
    pub num_labels: usize,
    /// Method that produced the labels.
    pub method: LabelMethod,
}

/// Labels events by colouring the contact graph of the domain pointed at the
/// empty configuration; the result is checked with [`verify_nice`].
pub fn nice_label(
    es: &EventStructure,
    method: LabelMethod,
    config_budget: usize,
    oracle_budget: u64,
) -> Result<Labeling> {
    let d = domain(es, config_budget)?;
    let c = Complex::new(d.graph.clone())?;
    let pointed = pointed_contact_graph(&c, 0)?.graph();
    let colours = match method {
        LabelMethod::Theorem1 => {
            let tc = TwoComplex::new(c)?;
            colour_contact_graph_default(&tc)?.colouring.colours
        }
        LabelMethod::Greedy => {
            let mut order: Vec<usize> = (0..pointed.n()).collect();
            order.sort_by_key(|&h| d.hyperplane_event[h]);
            greedy_colour(&pointed, &order).colours
        }
        LabelMethod::Exact => exact_colouring(&pointed, oracle_budget)?.colours,
    };
    let mut labels = vec![0; es.len()];
    for (h, &e) in d.hyperplane_event.iter().enumerate() {
        labels[e] = colours[h];
    }
    let mut used = labels.clone();
    used.sort_unstable();
    used.dedup();
    let table: HashMap<usize, usize> = used.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let labels: Vec<usize> = labels.iter().map(|l| table[l]).collect();
    if !verify_nice(es, &labels) {
        return Err(Error::PostconditionFailed("labeling is not nice".into()));
    }
    Ok(Labeling { num_labels: used.len(), labels, method })
}

/// True when independent events always get different labels.
pub fn verify_nice(es: &EventStructure, labels: &[usize]) -> bool {
    let n = es.len();
    labels.len() == n && (0..n).all(|a| (a + 1..n).all(|b| labels[a] != labels[b] || !es.independent(a, b)))
}
