//! Recubulation: a complex containing `X` isometrically whose crossing
//! graph is a prescribed graph between the crossing and contact graphs of `X`.

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::constructions::wallspace::{dual_cube_complex, Wallspace};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::median::MedianGraph;

/// Result of recubulating a complex along a graph on its hyperplanes.
#[derive(Debug, Clone)]
pub struct Recubulation {
    /// The recubulated median graph, pointed at the image of the basepoint of `X`.
    pub graph: MedianGraph,
    /// Image in `R` of every vertex of `X`.
    pub embedding: Vec<usize>,
    /// Number of squares attached at osculation corners.
    pub attached_squares: usize,
}

/// Postcondition data certified by [`verify_recubulation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecubulationCheck {
    /// Hyperplane of `R` extending each hyperplane of `X`.
    pub hyperplane_map: Vec<usize>,
    /// Dimension of `R`.
    pub dimension: usize,
    /// Clique number of the prescribed graph.
    pub alpha_clique: usize,
    /// Maximum degree of `R`.
    pub max_degree: usize,
    /// The bound `Δ² + Δ` for the maximum degree `Δ` of `X`.
    pub degree_bound: usize,
}

/// The maximum-degree bound `Δ² + Δ` of a recubulation.
pub fn recubulation_degree_bound(delta: usize) -> usize {
    delta * delta + delta
}

/// Checks `Γ#(X) ⊆ alpha ⊆ Γ(X)` on the hyperplane ids of `x`.
pub fn check_sandwich(x: &Complex, alpha: &SimpleGraph) -> Result<()> {
    if alpha.n() != x.m() {
        return Err(Error::SandwichViolated(format!(
            "graph has {} nodes but the complex has {} hyperplanes",
            alpha.n(),
            x.m()
        )));
    }
    for (a, b) in alpha.edges() {
        if !x.contacts(a, b) {
            return Err(Error::SandwichViolated(format!("edge ({a}, {b}) is not a contact")));
        }
    }
    for a in 0..x.m() {
        for b in x.crossing_row(a).ones().filter(|&b| b > a) {
            if !alpha.has_edge(a, b) {
                return Err(Error::SandwichViolated(format!("crossing ({a}, {b}) is missing")));
            }
        }
    }
    Ok(())
}

/// Recubulates `x` along `alpha`.
///
/// For every vertex `v` with neighbours `a`, `b` whose hyperplanes `H`, `H'`
/// osculate and are adjacent in `alpha`, a new point `w` closes the square
/// `v a w b`. Each hyperplane `K` extends to a wall on the enlarged point set:
/// `w` lies with `a` for `H`, with `b` for `H'` and with `v` otherwise. The
/// result is the dual of that wallspace, certified by [`verify_recubulation`].
pub fn recubulate(x: &Complex, alpha: &SimpleGraph, budget: usize) -> Result<Recubulation> {
    check_sandwich(x, alpha)?;
    let n = x.n();
    let mut corners = Vec::new();
    for v in 0..n {
        let nb = x.graph().neighbours(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                let h = x.edge_hyperplane(v, a).expect("edge");
                let k = x.edge_hyperplane(v, b).expect("edge");
                if alpha.has_edge(h, k) && !x.crosses(h, k) {
                    corners.push((v, h, a, k, b));
                }
            }
        }
    }
    let points = n + corners.len();
    let walls = (0..x.m())
        .map(|wall| {
            let mut side_a = Vec::new();
            let mut side_b = Vec::new();
            let mut place = |p: usize, src: usize| {
                if x.in_half_b(wall, src) {
                    side_b.push(p);
                } else {
                    side_a.push(p);
                }
            };
            for v in 0..n {
                place(v, v);
            }
            for (i, &(v, h, a, k, b)) in corners.iter().enumerate() {
                let src = if wall == h {
                    a
                } else if wall == k {
                    b
                } else {
                    v
                };
                place(n + i, src);
            }
            (side_a, side_b)
        })
        .collect();
    let dual = dual_cube_complex(&Wallspace { points, walls }, budget)?;
    let embedding: Vec<usize> = dual.point_vertex[..n].to_vec();
    let base = embedding[x.graph().basepoint().unwrap_or(0)];
    let graph = dual.graph.with_basepoint(Some(base))?;
    Ok(Recubulation { graph, embedding, attached_squares: corners.len() })
}

/// Verifies the recubulation postconditions of `r` with respect to `x` and
/// `alpha`: hyperplane bijection, crossing graph equal to `alpha`, isometric
/// embedding on all pairs, dimension at most `ω(alpha)` and maximum degree at
/// most `Δ² + Δ`.
pub fn verify_recubulation(
    x: &Complex,
    alpha: &SimpleGraph,
    r: &MedianGraph,
    embedding: &[usize],
) -> Result<RecubulationCheck> {
    let fail = |msg: String| Error::PostconditionFailed(msg);
    check_sandwich(x, alpha)?;
    if embedding.len() != x.n() || embedding.iter().any(|&v| v >= r.n()) {
        return Err(fail("embedding does not map every vertex into R".into()));
    }
    let rc = Complex::new(r.clone())?;
    if rc.m() != x.m() {
        return Err(fail(format!("R has {} hyperplanes, X has {}", rc.m(), x.m())));
    }
    let mut map = vec![usize::MAX; x.m()];
    for h in x.hyperplanes() {
        for &(u, v) in &h.edges {
            let image = rc
                .edge_hyperplane(embedding[u], embedding[v])
                .ok_or_else(|| fail(format!("edge ({u}, {v}) is not mapped to an edge")))?;
            if map[h.id] == usize::MAX {
                map[h.id] = image;
            } else if map[h.id] != image {
                return Err(fail(format!("hyperplane {} splits in R", h.id)));
            }
        }
    }
    let mut seen = vec![false; rc.m()];
    for &image in &map {
        if std::mem::replace(&mut seen[image], true) {
            return Err(fail("two hyperplanes of X share an image".into()));
        }
    }
    for a in 0..x.m() {
        for b in a + 1..x.m() {
            if rc.crosses(map[a], map[b]) != alpha.has_edge(a, b) {
                return Err(fail(format!("crossing of ({a}, {b}) in R disagrees with the graph")));
            }
        }
    }
    for u in 0..x.n() {
        for v in u + 1..x.n() {
            if rc.dist(embedding[u], embedding[v]) != x.dist(u, v) {
                return Err(fail(format!("distance between {u} and {v} is not preserved")));
            }
        }
    }
    let stats = rc.stats();
    let alpha_clique = alpha.clique_number().max(usize::from(x.m() > 0));
    if stats.dimension > alpha_clique {
        return Err(fail(format!("dimension {} exceeds clique number {alpha_clique}", stats.dimension)));
    }
    let degree_bound = recubulation_degree_bound(x.graph().graph().max_degree());
    if stats.max_degree > degree_bound {
        return Err(fail(format!("degree {} exceeds {degree_bound}", stats.max_degree)));
    }
    Ok(RecubulationCheck {
        hyperplane_map: map,
        dimension: stats.dimension,
        alpha_clique,
        max_degree: stats.max_degree,
        degree_bound,
    })
}
