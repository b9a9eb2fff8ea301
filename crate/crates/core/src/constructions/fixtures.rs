//! Small two-dimensional test complexes.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::median::{is_median_graph, median_by_structure, MedianGraph};

/// 1-skeleton of the grid `[0,m] × [0,n]`; vertex `(i, j)` has id `i(n+1) + j`.
pub fn grid(m: usize, n: usize) -> Result<MedianGraph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParams("grid sides must be at least 1".into()));
    }
    let id = |i: usize, j: usize| i * (n + 1) + j;
    let mut edges = Vec::new();
    for i in 0..=m {
        for j in 0..=n {
            if i < m {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if j < n {
                edges.push((id(i, j), id(i, j + 1)));
            }
        }
    }
    MedianGraph::new((m + 1) * (n + 1), &edges, Some(0))
}

/// Path with `n` edges.
pub fn path(n: usize) -> Result<MedianGraph> {
    if n == 0 {
        return Err(Error::InvalidParams("path length must be at least 1".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
    MedianGraph::new(n + 1, &edges, Some(0))
}

/// Union of unit grid squares with lower-left corners `cells`.
///
/// Vertices are the square corners in lexicographic order, edges are the
/// square sides. The result is connected but not checked for medianity.
pub fn square_union(cells: &[(i64, i64)]) -> Result<MedianGraph> {
    if cells.is_empty() {
        return Err(Error::InvalidParams("no squares".into()));
    }
    let mut corners = BTreeSet::new();
    let mut sides = BTreeSet::new();
    for &(x, y) in cells {
        let c = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)];
        corners.extend(c);
        for k in 0..4 {
            let (a, b) = (c[k], c[(k + 1) % 4]);
            sides.insert((a.min(b), a.max(b)));
        }
    }
    let index: BTreeMap<(i64, i64), usize> = corners.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let edges: Vec<_> = sides.iter().map(|(a, b)| (index[a], index[b])).collect();
    MedianGraph::new(corners.len(), &edges, Some(0))
}

/// Staircase of `2k - 1` squares climbing diagonally.
pub fn staircase(k: usize) -> Result<MedianGraph> {
    if k == 0 {
        return Err(Error::InvalidParams("staircase needs at least one step".into()));
    }
    let mut cells = Vec::new();
    for i in 0..k as i64 {
        cells.push((i, i));
        if i + 1 < k as i64 {
            cells.push((i + 1, i));
        }
    }
    square_union(&cells)
}

/// Parameters of [`random_square_complex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomParams {
    /// Number of squares to place.
    pub squares: usize,
    /// Upper bound on the vertex count.
    pub max_vertices: usize,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams { squares: 40, max_vertices: 150 }
    }
}

/// Grows a random median union of grid squares from a seed.
///
/// Squares are attached edge to edge; a square is kept only if the union
/// stays median. The final graph is validated again.
pub fn random_square_complex(seed: u64, params: RandomParams) -> Result<MedianGraph> {
    if params.squares == 0 || params.max_vertices < 4 {
        return Err(Error::InvalidParams("need at least one square and four vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells = vec![(0i64, 0i64)];
    let mut present: BTreeSet<(i64, i64)> = cells.iter().copied().collect();
    let mut attempts = 0;
    while cells.len() < params.squares && attempts < 50 * params.squares {
        attempts += 1;
        let (x, y) = cells[rng.gen_range(0..cells.len())];
        let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
        let cell = (x + dx, y + dy);
        if present.contains(&cell) {
            continue;
        }
        cells.push(cell);
        let g = square_union(&cells)?;
        if g.n() > params.max_vertices || !median_by_structure(g.graph()).is_median() {
            cells.pop();
            continue;
        }
        present.insert(cell);
    }
    let g = square_union(&cells)?;
    is_median_graph(g.graph()).into_result()?;
    Ok(g)
}

/// Grows a random two-dimensional median graph that need not be planar.
///
/// Each step either glues a new square along an existing edge, attaches a
/// pendant edge, or fills a corner `a – v – b` with a new vertex adjacent to
/// `a` and `b`. A step is kept only when the graph stays median and
/// two-dimensional and has at most `max_vertices` vertices. Gluing and
/// pendant steps only touch vertices of degree at most `max_degree`.
pub fn random_branching_complex(
    seed: u64,
    steps: usize,
    max_vertices: usize,
    max_degree: usize,
) -> Result<MedianGraph> {
    if max_vertices < 4 {
        return Err(Error::InvalidParams("need room for at least one square".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 4;
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
    for _ in 0..steps {
        let mut cand = edges.clone();
        let mut cn = n;
        let g = SimpleGraph::new(n, &edges)?;
        match rng.gen_range(0..10) {
            0..=4 => {
                let (u, v) = edges[rng.gen_range(0..edges.len())];
                if g.degree(u).max(g.degree(v)) > max_degree {
                    continue;
                }
                cand.extend([(u, n), (v, n + 1), (n, n + 1)]);
                cn += 2;
            }
            5 => {
                let u = rng.gen_range(0..n);
                if g.degree(u) > max_degree {
                    continue;
                }
                cand.push((u, n));
                cn += 1;
            }
            _ => {
                let v = rng.gen_range(0..n);
                let nb = g.neighbours(v);
                if nb.len() < 2 {
                    continue;
                }
                let a = nb[rng.gen_range(0..nb.len())];
                let b = nb[rng.gen_range(0..nb.len())];
                if a == b {
                    continue;
                }
                cand.extend([(a, n), (b, n)]);
                cn += 1;
            }
        }
        if cn > max_vertices {
            continue;
        }
        let g = SimpleGraph::new(cn, &cand)?;
        if !median_by_structure(&g).is_median() {
            continue;
        }
        let mg = MedianGraph::from_graph(g, Some(0))?;
        if !crate::complex::Complex::new(mg)?.is_two_dimensional() {
            continue;
        }
        edges = cand;
        n = cn;
    }
    let g = MedianGraph::new(n, &edges, Some(0))?;
    is_median_graph(g.graph()).into_result()?;
    Ok(g)
}

/// Simplex graph of `g`: cliques of `g`, adjacent when they differ in one vertex.
///
/// The empty clique has id 0 and the singleton `{v}` has id `v + 1`; larger
/// cliques follow by size, then lexicographically. The hyperplane dual to
/// the edge between `∅` and `{v}` has id `v`.
pub fn simplex_graph(g: &SimpleGraph) -> Result<MedianGraph> {
    let mut cliques: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in &frontier {
            let start = c.last().map_or(0, |&v| v + 1);
            for v in start..g.n() {
                if c.iter().all(|&u| g.has_edge(u, v)) {
                    let mut d = c.clone();
                    d.push(v);
                    next.push(d);
                }
            }
        }
        next.sort();
        cliques.extend(next.iter().cloned());
        frontier = next;
    }
    let index: BTreeMap<&Vec<usize>, usize> = cliques.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (i, c) in cliques.iter().enumerate() {
        for k in 0..c.len() {
            let mut smaller = c.clone();
            smaller.remove(k);
            edges.push((index[&smaller], i));
        }
    }
    MedianGraph::new(cliques.len(), &edges, Some(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fixtures() {
        assert_eq!(grid(1, 1).unwrap().edges().len(), 4);
        assert_eq!(path(3).unwrap().n(), 4);
        assert_eq!(staircase(2).unwrap().n(), 8);
        assert!(is_median_graph(staircase(4).unwrap().graph()).is_median());
    }

    #[test]
    fn random_complex_is_median_and_bounded() {
        let g = random_square_complex(7, RandomParams::default()).unwrap();
        assert!(g.n() <= 150);
        assert!(is_median_graph(g.graph()).is_median());
    }

    #[test]
    fn simplex_graph_of_an_edge_is_a_square() {
        let k2 = SimpleGraph::new(2, &[(0, 1)]).unwrap();
        let s = simplex_graph(&k2).unwrap();
        assert_eq!((s.n(), s.edges().len()), (4, 4));
        let point = simplex_graph(&SimpleGraph::empty(1)).unwrap();
        assert_eq!((point.n(), point.edges().len()), (2, 1));
    }
}
