//! JSON interchange formats.
//!
//! Every format serializes deterministically: ids are dense, lists are
//! sorted and maps are ordered by key.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::colouring::basic::{verify_colouring, Colouring};
use crate::constructions::boxes::Box3;
use crate::constructions::recubulation::RecubulationCheck;
use crate::constructions::theorem2::{FamilyMember, FamilyStats};
use crate::constructions::wallspace::Wallspace;
use crate::embedding::TreeFactor;
use crate::error::{Error, Result};
use crate::events::EventStructure;
use crate::graph::SimpleGraph;
use crate::median::MedianGraph;

/// `{"vertices": [0, 1, ...], "edges": [[u, v], ...], "basepoint": k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    /// Vertex ids `0..n`.
    pub vertices: Vec<usize>,
    /// Edges `[u, v]` with `u < v`.
    pub edges: Vec<[usize; 2]>,
    /// Optional basepoint.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<usize>,
}

impl GraphJson {
    /// Serializes a graph with sorted edges.
    pub fn from_graph(g: &SimpleGraph, basepoint: Option<usize>) -> Self {
        GraphJson {
            vertices: (0..g.n()).collect(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            basepoint,
        }
    }

    /// Serializes a pointed median graph.
    pub fn from_median(g: &MedianGraph) -> Self {
        Self::from_graph(g.graph(), g.basepoint())
    }

    /// Parses into a simple graph; vertex ids must be exactly `0..n`.
    pub fn to_graph(&self) -> Result<SimpleGraph> {
        let mut ids = self.vertices.clone();
        ids.sort_unstable();
        if ids.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::InvalidInput("vertex ids must be 0..n".into()));
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        SimpleGraph::new(ids.len(), &edges)
    }

    /// Parses into a connected graph without checking medianity.
    pub fn to_median_unchecked(&self) -> Result<MedianGraph> {
        MedianGraph::from_graph(self.to_graph()?, self.basepoint)
    }
}

/// `{"method": ..., "colours": {hid: colour}, "num_colours": k, "proper": b, "delta": Δ}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringJson {
    /// `theorem1`, `greedy` or `exact`.
    pub method: String,
    /// Colour of each node.
    pub colours: BTreeMap<usize, usize>,
    /// Number of distinct colours.
    pub num_colours: usize,
    /// Whether the colouring is proper on the graph it was built for.
    pub proper: bool,
    /// Maximum degree of the complex, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
}

impl ColouringJson {
    /// Wraps a colouring, checking properness on `g`.
    pub fn new(method: &str, g: &SimpleGraph, colouring: &Colouring, delta: Option<usize>) -> Self {
        ColouringJson {
            method: method.to_string(),
            colours: colouring.colours.iter().copied().enumerate().collect(),
            num_colours: colouring.num_colours,
            proper: verify_colouring(g, colouring),
            delta,
        }
    }

    /// Colour vector for nodes `0..n`; every node must be present.
    pub fn to_vec(&self, n: usize) -> Result<Vec<usize>> {
        if self.colours.len() != n || self.colours.keys().enumerate().any(|(i, &k)| i != k) {
            return Err(Error::InvalidInput(format!("colouring must cover nodes 0..{n}")));
        }
        Ok(self.colours.values().copied().collect())
    }
}

/// One tree factor of an embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    /// Colour of the wall class.
    pub colour: usize,
    /// Hyperplanes of the class.
    pub walls: Vec<usize>,
    /// Tree edges.
    pub tree_edges: Vec<[usize; 2]>,
    /// Tree vertex of each 0-cube.
    pub vertex_map: Vec<usize>,
}

/// `{"k": k, "factors": [...], "isometric": b}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    /// Number of factors.
    pub k: usize,
    /// The tree factors.
    pub factors: Vec<FactorJson>,
    /// Whether the product metric matches the complex metric.
    pub isometric: bool,
}

impl EmbeddingJson {
    /// Serializes factors with their isometry verdict.
    pub fn new(factors: &[TreeFactor], isometric: bool) -> Self {
        let factors: Vec<FactorJson> = factors
            .iter()
            .map(|f| FactorJson {
                colour: f.colour,
                walls: f.wall_class.clone(),
                tree_edges: f.tree.edges().into_iter().map(|(u, v)| [u, v]).collect(),
                vertex_map: f.vertex_map.clone(),
            })
            .collect();
        EmbeddingJson { k: factors.len(), factors, isometric }
    }
}

/// A recubulated graph with the image of each original 0-cube.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecubulationJson {
    /// The recubulated graph.
    pub graph: GraphJson,
    /// Image of each original 0-cube.
    pub embedding: Vec<usize>,
    /// Certified postconditions.
    pub check: RecubulationCheck,
}

/// A member of the bounded-dimension family with its distinguished 0-cubes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMemberJson {
    /// The graph, pointed at `alpha`.
    pub graph: GraphJson,
    /// Origin corner.
    pub alpha: usize,
    /// Opposite corner.
    pub beta: usize,
    /// Certified statistics.
    pub stats: FamilyStats,
}

impl FamilyMemberJson {
    /// Serializes a family member.
    pub fn new(m: &FamilyMember) -> Self {
        FamilyMemberJson {
            graph: GraphJson::from_median(&m.graph),
            alpha: m.alpha,
            beta: m.beta,
            stats: m.stats.clone(),
        }
    }
}

/// A wedge of family members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    /// The wedge.
    pub graph: GraphJson,
    /// Vertex ids of each member.
    pub blocks: Vec<Vec<usize>>,
}

/// `{"boxes": [[[a', a''], [b', b''], [c', c'']], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxFamilyJson {
    /// The boxes.
    pub boxes: Vec<Box3>,
}

impl BoxFamilyJson {
    /// Boxes after checking every interval.
    pub fn to_boxes(&self) -> Result<Vec<Box3>> {
        self.boxes.iter().map(|b| Box3::new(b.intervals)).collect()
    }
}

/// `{"points": [0, 1, ...], "walls": [[[...], [...]], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallspaceJson {
    /// Point ids `0..n`.
    pub points: Vec<usize>,
    /// Walls as pairs of sides.
    pub walls: Vec<[Vec<usize>; 2]>,
}

impl WallspaceJson {
    /// Serializes a wallspace.
    pub fn from_wallspace(w: &Wallspace) -> Self {
        WallspaceJson {
            points: (0..w.points).collect(),
            walls: w.walls.iter().map(|(a, b)| [a.clone(), b.clone()]).collect(),
        }
    }

    /// Parses and validates a wallspace.
    pub fn to_wallspace(&self) -> Result<Wallspace> {
        let mut ids = self.points.clone();
        ids.sort_unstable();
        if ids.iter().enumerate().any(|(i, &p)| i != p) {
            return Err(Error::InvalidInput("point ids must be 0..n".into()));
        }
        let w =
            Wallspace { points: ids.len(), walls: self.walls.iter().map(|[a, b]| (a.clone(), b.clone())).collect() };
        w.validate()?;
        Ok(w)
    }
}

/// `{"events": [0, 1, ...], "causality": [[e, e'], ...], "conflict": [[e, e'], ...]}`.
///
/// Causality lists covering pairs on output and is closed transitively on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventStructureJson {
    /// Event ids `0..n`.
    pub events: Vec<usize>,
    /// Pairs `e ≤ e'`.
    pub causality: Vec<[usize; 2]>,
    /// Pairs `e ⌣ e'`.
    pub conflict: Vec<[usize; 2]>,
}

impl EventStructureJson {
    /// Serializes with covering pairs and conflicts `e < e'`.
    pub fn from_structure(es: &EventStructure) -> Self {
        EventStructureJson {
            events: (0..es.len()).collect(),
            causality: es.covering_pairs().into_iter().map(|(a, b)| [a, b]).collect(),
            conflict: es.conflict_pairs().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    /// Parses an event structure without checking its axioms.
    pub fn to_structure(&self) -> Result<EventStructure> {
        let mut ids = self.events.clone();
        ids.sort_unstable();
        if ids.iter().enumerate().any(|(i, &e)| i != e) {
            return Err(Error::InvalidInput("event ids must be 0..n".into()));
        }
        let pairs = |v: &[[usize; 2]]| v.iter().map(|&[a, b]| (a, b)).collect::<Vec<_>>();
        EventStructure::new(ids.len(), &pairs(&self.causality), &pairs(&self.conflict))
    }
}

/// Parses a whitespace-separated edge list, one `u v` pair per line.
///
/// Blank lines and lines starting with `#` are skipped; the vertex count is
/// one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let ids: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidInput(format!("line {}: {e}", i + 1)))?;
        match ids[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(Error::InvalidInput(format!("line {}: expected two ids", i + 1))),
        }
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    SimpleGraph::new(n, &edges)
}
