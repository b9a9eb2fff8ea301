//! Shared corpus of two-dimensional complexes.
#![allow(dead_code)]

use cubeforest::constructions::{grid, path, random_square_complex, simplex_graph, staircase, RandomParams};
use cubeforest::{MedianGraph, SimpleGraph};

pub mod brute;

/// The five-cycle.
pub fn c5() -> SimpleGraph {
    SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
}

/// The Petersen graph.
pub fn petersen() -> SimpleGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    SimpleGraph::new(10, &e).unwrap()
}

/// Named two-dimensional complexes: grids up to 6×6, paths, staircases,
/// simplex graphs of C5 and Petersen, and ten seeded random complexes.
pub fn corpus() -> Vec<(String, MedianGraph)> {
    let mut out = Vec::new();
    for (m, n) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (5, 5), (6, 6), (1, 6), (2, 6)] {
        out.push((format!("grid {m}x{n}"), grid(m, n).unwrap()));
    }
    for k in [1, 2, 3, 5, 8] {
        out.push((format!("path {k}"), path(k).unwrap()));
    }
    for k in [2, 3, 4, 6] {
        out.push((format!("staircase {k}"), staircase(k).unwrap()));
    }
    out.push(("simplex C5".into(), simplex_graph(&c5()).unwrap()));
    out.push(("simplex Petersen".into(), simplex_graph(&petersen()).unwrap()));
    for seed in 0..10 {
        let g = random_square_complex(seed, RandomParams { squares: 110, max_vertices: 150 }).unwrap();
        out.push((format!("random {seed}"), g));
    }
    out
}
