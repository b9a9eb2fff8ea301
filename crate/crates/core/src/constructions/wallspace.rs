//! Wallspaces and their dual median graphs.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::dual::dual_graph;
use crate::error::{Error, Result};
use crate::median::MedianGraph;

/// Default cap on the number of dual vertices.
pub const DEFAULT_ORIENTATION_BUDGET: usize = 200_000;

/// Points `0..points` with a list of bipartitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wallspace {
    /// Number of points.
    pub points: usize,
    /// Walls as pairs of sides.
    pub walls: Vec<(Vec<usize>, Vec<usize>)>,
}

impl Wallspace {
    /// Checks that every wall splits the points into two nonempty sides and
    /// that no two walls coincide.
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for (i, (a, b)) in self.walls.iter().enumerate() {
            if a.is_empty() || b.is_empty() {
                return Err(Error::InvalidInput(format!("wall {i} has an empty side")));
            }
            let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
            all.sort_unstable();
            if all != (0..self.points).collect::<Vec<_>>() {
                return Err(Error::InvalidInput(format!("wall {i} does not partition the points")));
            }
            let mut key = a.clone();
            key.sort_unstable();
            let mut other = b.clone();
            other.sort_unstable();
            if !seen.insert(key.clone().min(other.clone())) {
                return Err(Error::InvalidInput(format!("wall {i} repeats an earlier wall")));
            }
        }
        Ok(())
    }

    pub(crate) fn side_sets(&self) -> Vec<FixedBitSet> {
        self.walls
            .iter()
            .map(|(_, b)| {
                let mut s = FixedBitSet::with_capacity(self.points);
                for &p in b {
                    s.insert(p);
                }
                s
            })
            .collect()
    }
}

/// A dual median graph with the position of every point.
#[derive(Debug, Clone)]
pub struct DualComplex {
    /// The dual graph, pointed at the orientation of point 0.
    pub graph: MedianGraph,
    /// Vertex of the orientation defined by each point.
    pub point_vertex: Vec<usize>,
    /// Wall label of each edge of `graph`, aligned with `graph.edges()`.
    pub edge_wall: Vec<usize>,
}

/// Dual median graph of a finite wallspace.
pub fn dual_cube_complex(w: &Wallspace, budget: usize) -> Result<DualComplex> {
    w.validate()?;
    if w.points == 0 {
        return Err(Error::InvalidInput("wallspace has no points".into()));
    }
    let sides = w.side_sets();
    let orientation = |p: usize| {
        let mut o = FixedBitSet::with_capacity(sides.len());
        for (i, s) in sides.iter().enumerate() {
            o.set(i, s.contains(p));
        }
        o
    };
    let d = dual_graph(&sides, w.points, orientation(0), budget)?;
    let index: std::collections::HashMap<&FixedBitSet, usize> =
        d.orientations.iter().enumerate().map(|(i, o)| (o, i)).collect();
    let point_vertex = (0..w.points).map(|p| index[&orientation(p)]).collect();
    let edges: Vec<(usize, usize)> = d.edges.iter().map(|&(u, v, _)| (u, v)).collect();
    let edge_wall = d.edges.iter().map(|&(_, _, w)| w).collect();
    let graph = MedianGraph::new(d.orientations.len(), &edges, Some(0))?;
    Ok(DualComplex { graph, point_vertex, edge_wall })
}
