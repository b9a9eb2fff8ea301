//! Consistent orientations of a finite family of walls.
//!
//! A wall is stored as the set of points on its side `1`; side `0` is the
//! complement. An orientation picks one side per wall and is consistent when
//! every two chosen sides intersect. The consistent orientations, joined when
//! they differ on one wall, form the dual median graph.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Vertices and edges of a dual graph.
#[derive(Debug, Clone)]
pub struct DualGraph {
    /// Orientation per vertex, bit `w` set when wall `w` is oriented to side `1`.
    pub orientations: Vec<FixedBitSet>,
    /// Edges `(u, v, wall)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize, usize)>,
}

/// Pairwise intersection table of the `2m` halfspaces of `m` walls.
pub(crate) struct Compatibility {
    m: usize,
    meets: Vec<FixedBitSet>,
}

impl Compatibility {
    pub(crate) fn new(sides: &[FixedBitSet], n_points: usize) -> Self {
        let m = sides.len();
        let halves: Vec<FixedBitSet> = sides
            .iter()
            .flat_map(|s| {
                let mut zero = FixedBitSet::with_capacity(n_points);
                zero.insert_range(..);
                zero.difference_with(s);
                [zero, s.clone()]
            })
            .collect();
        let mut meets = vec![FixedBitSet::with_capacity(2 * m); 2 * m];
        for a in 0..2 * m {
            for b in a..2 * m {
                if !halves[a].is_disjoint(&halves[b]) {
                    meets[a].insert(b);
                    meets[b].insert(a);
                }
            }
        }
        Compatibility { m, meets }
    }

    fn chosen(&self, o: &FixedBitSet) -> FixedBitSet {
        let mut c = FixedBitSet::with_capacity(2 * self.m);
        for w in 0..self.m {
            c.insert(2 * w + usize::from(o.contains(w)));
        }
        c
    }

    /// True when flipping wall `w` keeps `o` consistent; `chosen` is `self.chosen(o)`.
    fn can_flip(&self, chosen: &FixedBitSet, o: &FixedBitSet, w: usize) -> bool {
        let new_half = 2 * w + usize::from(!o.contains(w));
        let old_half = 2 * w + usize::from(o.contains(w));
        chosen.ones().filter(|&h| h != old_half).all(|h| self.meets[new_half].contains(h))
    }

    /// True when all chosen halfspaces of `o` pairwise intersect.
    pub(crate) fn is_consistent(&self, o: &FixedBitSet) -> bool {
        let chosen = self.chosen(o);
        chosen.ones().all(|h| chosen.is_subset(&self.meets[h]))
    }
}

/// Enumerates the dual graph by flipping one wall at a time from `start`.
///
/// Fails with [`Error::ExplosionBudget`] once more than `budget` orientations
/// are discovered.
pub fn dual_graph(sides: &[FixedBitSet], n_points: usize, start: FixedBitSet, budget: usize) -> Result<DualGraph> {
    let compat = Compatibility::new(sides, n_points);
    if !compat.is_consistent(&start) {
        return Err(Error::InvalidInput("start orientation is not consistent".into()));
    }
    let m = sides.len();
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut orientations = vec![start.clone()];
    index.insert(start, 0);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let o = orientations[u].clone();
        let chosen = compat.chosen(&o);
        for w in 0..m {
            if !compat.can_flip(&chosen, &o, w) {
                continue;
            }
            let mut next = o.clone();
            next.toggle(w);
            let v = match index.get(&next) {
                Some(&v) => v,
                None => {
                    if orientations.len() >= budget {
                        return Err(Error::ExplosionBudget(budget));
                    }
                    let v = orientations.len();
                    index.insert(next.clone(), v);
                    orientations.push(next);
                    queue.push_back(v);
                    v
                }
            };
            if u < v {
                edges.push((u, v, w));
            }
        }
    }
    edges.sort_unstable();
    Ok(DualGraph { orientations, edges })
}
