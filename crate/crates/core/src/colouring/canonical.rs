//! Canonical paths: lexicographically least Γ-geodesics from the base.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::colouring::grading::Grading;
use crate::complex::Complex;
use crate::graph::SimpleGraph;

/// A canonical path `H₀, …, H_r` with its realisation points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalPath {
    /// Hyperplane sequence from the base to the target.
    pub path: Vec<usize>,
    /// Points `x₀, …, x_{r-1}` with `x_i ∈ N(H_i) ∩ N(H_{i+1})`; the segment
    /// `R_i` runs from `x_{i-1}` to `x_i` inside `N(H_i)`.
    pub points: Vec<usize>,
    /// Segment lengths `(|R_{r-1}|, …, |R₁|)`.
    pub weight: Vec<usize>,
}

impl CanonicalPath {
    /// Target hyperplane.
    pub fn target(&self) -> usize {
        *self.path.last().expect("paths are nonempty")
    }

    /// The grandfather `H_{r-2}`, defined for grade at least two.
    pub fn grandfather(&self) -> Option<usize> {
        self.path.len().checked_sub(3).map(|i| self.path[i])
    }

    /// A geodesic vertex path for each segment `R_i`, `i = 1, …, r-1`.
    pub fn realization(&self, c: &Complex) -> Vec<Vec<usize>> {
        (1..self.points.len()).map(|i| carrier_geodesic(c, self.path[i], self.points[i - 1], self.points[i])).collect()
    }
}

/// Shortest path from `from` to `to` inside the carrier of `h`.
fn carrier_geodesic(c: &Complex, h: usize, from: usize, to: usize) -> Vec<usize> {
    let dist = c.bfs_within(to, c.carrier_set(h));
    let mut out = vec![from];
    let mut x = from;
    while x != to {
        x = *c
            .graph()
            .neighbours(x)
            .iter()
            .filter(|&&y| dist[y] != usize::MAX && dist[y] + 1 == dist[x])
            .min()
            .expect("carriers are convex and connected");
        out.push(x);
    }
    out
}

#[derive(Clone)]
struct Best {
    weight: Vec<usize>,
    path: Vec<usize>,
    points: Vec<usize>,
}

impl Best {
    fn key(&self) -> (&[usize], &[usize]) {
        (&self.weight, &self.path)
    }
}

/// Canonical paths of every hyperplane with grade in `1..=max_grade`.
///
/// Forward dynamic programming over states `(H_i, x_i)`: the best prefix
/// ending at `x_i ∈ N(H_i)` composes with the next segment because weights
/// are compared from the last segment backwards. Ties between equal weights
/// go to the smallest hyperplane sequence.
pub fn canonical_paths(
    c: &Complex,
    gamma: &SimpleGraph,
    grading: &Grading,
    max_grade: usize,
) -> HashMap<usize, CanonicalPath> {
    let mut out = HashMap::new();
    let top = max_grade.min(grading.max_grade());
    let base = grading.base;
    let mut layer: HashMap<(usize, usize), Best> = c
        .carrier_set(base)
        .ones()
        .map(|x| ((base, x), Best { weight: Vec::new(), path: vec![base], points: vec![x] }))
        .collect();
    for r in 1..=top {
        let sphere = &grading.spheres[r];
        for &h in sphere {
            if let Some(best) = finish(c, gamma, grading, &layer, h, r) {
                out.insert(h, best);
            }
        }
        if r == top {
            break;
        }
        let mut next = HashMap::new();
        for &a in sphere {
            let preds: Vec<(usize, usize, &Best)> = gamma
                .neighbours(a)
                .iter()
                .filter(|&&p| grading.grade[p] == r - 1)
                .flat_map(|&p| {
                    c.carrier_set(p)
                        .intersection(c.carrier_set(a))
                        .filter_map(|y| layer.get(&(p, y)).map(|b| (p, y, b)))
                        .collect::<Vec<_>>()
                })
                .collect();
            for x in c.carrier_set(a).ones() {
                let mut chosen: Option<Best> = None;
                for &(_, y, prev) in &preds {
                    let mut weight = Vec::with_capacity(prev.weight.len() + 1);
                    weight.push(c.dist(y, x));
                    weight.extend_from_slice(&prev.weight);
                    let mut path = prev.path.clone();
                    path.push(a);
                    let candidate = Best { weight, path, points: Vec::new() };
                    if chosen.as_ref().is_none_or(|cur| candidate.key() < cur.key()) {
                        let mut points = prev.points.clone();
                        points.push(x);
                        chosen = Some(Best { points, ..candidate });
                    }
                }
                if let Some(b) = chosen {
                    next.insert((a, x), b);
                }
            }
        }
        layer = next;
    }
    out
}

fn finish(
    c: &Complex,
    gamma: &SimpleGraph,
    grading: &Grading,
    layer: &HashMap<(usize, usize), Best>,
    h: usize,
    r: usize,
) -> Option<CanonicalPath> {
    let mut chosen: Option<&Best> = None;
    for &a in gamma.neighbours(h) {
        if grading.grade[a] != r - 1 {
            continue;
        }
        for x in c.carrier_set(a).intersection(c.carrier_set(h)) {
            if let Some(b) = layer.get(&(a, x)) {
                if chosen.is_none_or(|cur| b.key() < cur.key()) {
                    chosen = Some(b);
                }
            }
        }
    }
    chosen.map(|b| {
        let mut path = b.path.clone();
        path.push(h);
        let points = if r == 1 { Vec::new() } else { b.points.clone() };
        CanonicalPath { path, points, weight: b.weight.clone() }
    })
}

/// Canonical path of a single hyperplane of grade at least one.
pub fn canonical_path(c: &Complex, gamma: &SimpleGraph, grading: &Grading, h: usize) -> Option<CanonicalPath> {
    let r = grading.grade[h];
    if r == 0 || r == usize::MAX {
        return None;
    }
    canonical_paths(c, gamma, grading, r).remove(&h)
}

/// A pair of same-grade hyperplanes whose grandfathers are distinct and
/// do not contact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombingViolation {
    /// First hyperplane.
    pub h: usize,
    /// Second hyperplane.
    pub h2: usize,
    /// Their grandfathers.
    pub grandfathers: (usize, usize),
}

/// Checks that contacting or same-cluster pairs of equal grade have equal or
/// contacting grandfathers.
pub fn check_weak_combing(
    c: &Complex,
    grading: &Grading,
    paths: &HashMap<usize, CanonicalPath>,
) -> Vec<CombingViolation> {
    let mut out = Vec::new();
    for sphere in grading.clusters.iter().skip(2) {
        for cluster in sphere {
            for (i, &a) in cluster.iter().enumerate() {
                for &b in &cluster[i + 1..] {
                    let (Some(pa), Some(pb)) = (paths.get(&a), paths.get(&b)) else { continue };
                    let (ga, gb) = (pa.grandfather().unwrap(), pb.grandfather().unwrap());
                    if ga != gb && !c.contacts(ga, gb) {
                        out.push(CombingViolation { h: a, h2: b, grandfathers: (ga, gb) });
                    }
                }
            }
        }
    }
    out
}
