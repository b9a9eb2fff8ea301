//! Box complexes of subdivided boxes and the lifted complex of a box family.

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::constructions::boxes::{Box3, BoxFamily};
use crate::error::{Error, Result};
use crate::geometry::{contact_graph, pointed_contact_graph};
use crate::median::{is_median_graph, MedianGraph};

/// Grid points of a subdivided box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxGrid {
    /// Sorted subdivision coordinates per axis, including the box ends.
    pub coords: [Vec<i64>; 3],
}

impl BoxGrid {
    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.coords.iter().map(Vec::len).product()
    }

    /// True when the grid has no points.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Vertex id of the grid point with indices `(i, j, k)`.
    pub fn id(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.coords[1].len() + j) * self.coords[2].len() + k
    }

    /// Coordinates of a vertex id.
    pub fn point(&self, v: usize) -> [i64; 3] {
        let nz = self.coords[2].len();
        let ny = self.coords[1].len();
        [self.coords[0][v / (ny * nz)], self.coords[1][(v / nz) % ny], self.coords[2][v % nz]]
    }

    /// Edges joining grid points that differ in one index by one.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let [nx, ny, nz] = [self.coords[0].len(), self.coords[1].len(), self.coords[2].len()];
        let mut edges = Vec::new();
        for i in 0..nx {
            for j in 0..ny {
                for k in 0..nz {
                    let v = self.id(i, j, k);
                    if i + 1 < nx {
                        edges.push((v, self.id(i + 1, j, k)));
                    }
                    if j + 1 < ny {
                        edges.push((v, self.id(i, j + 1, k)));
                    }
                    if k + 1 < nz {
                        edges.push((v, self.id(i, j, k + 1)));
                    }
                }
            }
        }
        edges
    }
}

/// The box complex of `b0` cut by axis-parallel planes `(axis, coordinate)`.
///
/// Every plane must cross the interior of `b0`. The result is the product of
/// three subdivided intervals.
pub fn box_complex(b0: &Box3, planes: &[(usize, i64)]) -> Result<(MedianGraph, BoxGrid)> {
    let grid = subdivide(b0.intervals, planes)?;
    let g = MedianGraph::new(grid.len(), &grid.edges(), Some(0))?;
    Ok((g, grid))
}

fn subdivide(intervals: [[i64; 2]; 3], planes: &[(usize, i64)]) -> Result<BoxGrid> {
    let mut coords: [Vec<i64>; 3] = std::array::from_fn(|a| intervals[a].to_vec());
    for &(axis, c) in planes {
        let [lo, hi] = *intervals.get(axis).ok_or_else(|| Error::InvalidInput(format!("axis {axis}")))?;
        if c <= lo || c >= hi {
            return Err(Error::InvalidInput(format!("plane {c} on axis {axis} misses the interior")));
        }
        coords[axis].push(c);
    }
    for c in &mut coords {
        c.sort_unstable();
        c.dedup();
    }
    Ok(BoxGrid { coords })
}

/// The lifted complex of a box family.
#[derive(Debug, Clone)]
pub struct LiftedComplex {
    /// The median graph, pointed at `alpha`.
    pub graph: MedianGraph,
    /// Grid of the bounding box; its points are vertices `0..grid.len()`.
    pub grid: BoxGrid,
    /// Origin corner of the bounding box.
    pub alpha: usize,
    /// Opposite corner of the bounding box.
    pub beta: usize,
    /// Lifted copy of each grid point of each box: `(box, grid vertex, lift)`.
    pub lifts: Vec<(usize, usize, usize)>,
    /// Hyperplane dual to the lifting edges of each box.
    pub box_hyperplane: Vec<usize>,
    /// Clique number of the box family.
    pub omega: usize,
    /// Maximum degree of the lifted complex.
    pub max_degree: usize,
    /// Clique number of the contact graph.
    pub contact_clique: usize,
    /// Clique number of the contact graph pointed at `alpha`.
    pub pointed_clique: usize,
}

/// Lifts the box complex cut out by all faces of the family.
///
/// The bounding box extends one unit beyond the family on every side. Every
/// grid point `v` of box `i` gets a copy `(v, i)` joined to `v` and to the
/// copies of its grid neighbours inside box `i`. The result is checked to be
/// median with maximum degree and contact clique number at most `ω + 6`, and
/// its contact graph pointed at `alpha` must have clique number `ω + 3`.
pub fn lifted_complex(family: &BoxFamily) -> Result<LiftedComplex> {
    let boxes = &family.boxes;
    let omega = family.stats.omega;
    let mut b0 = [[0i64, 1]; 3];
    for (axis, iv) in b0.iter_mut().enumerate() {
        if !boxes.is_empty() {
            iv[0] = boxes.iter().map(|b| b.intervals[axis][0]).min().expect("nonempty") - 1;
            iv[1] = boxes.iter().map(|b| b.intervals[axis][1]).max().expect("nonempty") + 1;
        }
    }
    let planes: Vec<(usize, i64)> =
        boxes.iter().flat_map(|b| (0..3).flat_map(move |a| b.intervals[a].map(|c| (a, c)))).collect();
    let grid = subdivide(b0, &planes)?;
    let mut edges = grid.edges();
    let mut n = grid.len();
    let mut lifts = Vec::new();
    for (i, b) in boxes.iter().enumerate() {
        let mut copy = std::collections::HashMap::new();
        for v in 0..grid.len() {
            if b.contains_point(grid.point(v)) {
                copy.insert(v, n);
                lifts.push((i, v, n));
                edges.push((v, n));
                n += 1;
            }
        }
        for &(u, w) in &grid.edges() {
            if let (Some(&cu), Some(&cw)) = (copy.get(&u), copy.get(&w)) {
                edges.push((cu, cw));
            }
        }
    }
    let alpha = 0;
    let beta = grid.len() - 1;
    let graph = MedianGraph::new(n, &edges, Some(alpha))?;
    is_median_graph(graph.graph()).into_result().map_err(|e| Error::NotMedianAfterLift(e.to_string()))?;
    let max_degree = graph.graph().max_degree();
    if max_degree > omega + 6 {
        return Err(Error::PostconditionFailed(format!("degree {max_degree} exceeds ω + 6 = {}", omega + 6)));
    }
    let c = Complex::new(graph.clone())?;
    let mut box_hyperplane = vec![usize::MAX; boxes.len()];
    for &(i, v, lift) in &lifts {
        box_hyperplane[i] = c.edge_hyperplane(v, lift).expect("lifting edge");
    }
    let contact_clique = contact_graph(&c)?.graph().clique_number();
    if contact_clique > omega + 6 {
        return Err(Error::PostconditionFailed(format!("contact clique {contact_clique} exceeds ω + 6")));
    }
    let pointed_clique = pointed_contact_graph(&c, alpha)?.graph().clique_number();
    if pointed_clique != omega + 3 {
        return Err(Error::PostconditionFailed(format!(
            "pointed clique {pointed_clique} differs from ω + 3 = {}",
            omega + 3
        )));
    }
    Ok(LiftedComplex {
        graph,
        grid,
        alpha,
        beta,
        lifts,
        box_hyperplane,
        omega,
        max_degree,
        contact_clique,
        pointed_clique,
    })
}
