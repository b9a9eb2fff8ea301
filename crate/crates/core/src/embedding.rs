//! Isometric embeddings into products of trees from crossing-graph colourings.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colouring::ball::colour_contact_graph_default;
use crate::colouring::basic::{exact_colouring, greedy_colour, Colouring};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::geometry::TwoComplex;
use crate::graph::SimpleGraph;

/// One tree factor of an embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeFactor {
    /// Colour of the wall class.
    pub colour: usize,
    /// The tree.
    pub tree: SimpleGraph,
    /// Smallest 0-cube of each tree vertex.
    pub representatives: Vec<usize>,
    /// Tree vertex of each 0-cube.
    pub vertex_map: Vec<usize>,
    /// Hyperplanes of the colour class.
    pub wall_class: Vec<usize>,
}

/// Builds one tree per colour class of a proper crossing colouring.
///
/// Tree vertices are the classes of 0-cubes separated by no wall of the
/// colour class; tree edges join classes separated by exactly one wall.
pub fn embed_in_trees(c: &Complex, colours: &[usize]) -> Result<Vec<TreeFactor>> {
    if colours.len() != c.m() {
        return Err(Error::InvalidInput(format!("{} colours for {} hyperplanes", colours.len(), c.m())));
    }
    let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut sorted: Vec<usize> = colours.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &col in &sorted {
        let class: Vec<usize> = (0..c.m()).filter(|&h| colours[h] == col).collect();
        for (i, &a) in class.iter().enumerate() {
            if let Some(&b) = class[i + 1..].iter().find(|&&b| c.crosses(a, b)) {
                return Err(Error::ClassNotLaminar(col, a, b));
            }
        }
        classes.push((col, class));
    }
    classes.into_par_iter().enumerate().map(|(i, (col, class))| factor(c, i, col, class)).collect()
}

fn factor(c: &Complex, index: usize, colour: usize, class: Vec<usize>) -> Result<TreeFactor> {
    let mut mask = FixedBitSet::with_capacity(c.m());
    for &h in &class {
        mask.insert(h);
    }
    let mut ids: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut representatives = Vec::new();
    let mut vertex_map = Vec::with_capacity(c.n());
    for v in 0..c.n() {
        let mut key = c.label(v).clone();
        key.intersect_with(&mask);
        let next = ids.len();
        let id = *ids.entry(key).or_insert(next);
        if id == next {
            representatives.push(v);
        }
        vertex_map.push(id);
    }
    let mut edges = Vec::new();
    for (u, v) in c.graph().edges() {
        let h = c.edge_hyperplane(u, v).expect("edge");
        if mask.contains(h) {
            let (a, b) = (vertex_map[u], vertex_map[v]);
            edges.push((a.min(b), a.max(b)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let t = representatives.len();
    let tree = SimpleGraph::new(t, &edges).map_err(|_| Error::FactorNotTree(index))?;
    if edges.len() + 1 != t || edges.len() != class.len() || !tree.is_connected() {
        return Err(Error::FactorNotTree(index));
    }
    Ok(TreeFactor { colour, tree, representatives, vertex_map, wall_class: class })
}

/// Result of comparing the complex metric with the product metric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryCheck {
    /// True when every pair of 0-cubes is at equal distance in both metrics.
    pub isometric: bool,
    /// First pair `(u, v, d_X, Σ d_T)` that differs.
    pub counterexample: Option<(usize, usize, usize, usize)>,
}

/// Compares all-pairs distances in the 1-skeleton with the ℓ¹ sum of tree
/// distances, both computed by breadth-first search.
pub fn verify_isometry(c: &Complex, factors: &[TreeFactor]) -> IsometryCheck {
    let g = c.graph().graph();
    let bad = (0..c.n()).into_par_iter().find_map_first(|u| {
        let dx = g.bfs(u);
        let dts: Vec<Vec<usize>> = factors.iter().map(|f| f.tree.bfs(f.vertex_map[u])).collect();
        (u + 1..c.n()).find_map(|v| {
            let sum: usize = factors.iter().zip(&dts).map(|(f, d)| d[f.vertex_map[v]]).sum();
            (sum != dx[v]).then_some((u, v, dx[v], sum))
        })
    });
    IsometryCheck { isometric: bad.is_none(), counterexample: bad }
}

/// How the crossing graph was coloured by [`tau_upper`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TauMethod {
    /// The exact oracle; the count equals the tree dimension.
    Exact,
    /// The contact-graph pipeline for two-dimensional complexes.
    Theorem1,
    /// Greedy colouring.
    Greedy,
}

/// An upper bound on the number of trees needed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauBound {
    /// Number of colours used.
    pub colours: usize,
    /// The crossing colouring.
    pub colouring: Colouring,
    /// Method that produced the colouring.
    pub method: TauMethod,
}

/// Colours the crossing graph: exactly within `budget`, else by the better
/// of the two-dimensional pipeline and greedy.
pub fn tau_upper(c: &Complex, budget: u64) -> Result<TauBound> {
    let crossing = c.crossing_graph();
    match exact_colouring(&crossing, budget) {
        Ok(colouring) => {
            return Ok(TauBound { colours: colouring.num_colours, colouring, method: TauMethod::Exact });
        }
        Err(e) if e.is_budget() => {}
        Err(e) => return Err(e),
    }
    let order: Vec<usize> = (0..crossing.n()).collect();
    let mut best = (greedy_colour(&crossing, &order), TauMethod::Greedy);
    if c.is_two_dimensional() {
        let tc = TwoComplex::new(c.clone())?;
        if let Ok(cc) = colour_contact_graph_default(&tc) {
            if cc.colouring.num_colours < best.0.num_colours {
                best = (cc.colouring, TauMethod::Theorem1);
            }
        }
    }
    Ok(TauBound { colours: best.0.num_colours, colouring: best.0, method: best.1 })
}
