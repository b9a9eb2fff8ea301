//! Separating osculators and the graph Υ(U) with its three-part colouring.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::colouring::distance::{hyperplane_distance, separators};
use crate::colouring::fathers::{linear_extension, precedes, FatherData};
use crate::error::{Error, Result};
use crate::geometry::{colour_imprints, TwoComplex};
use crate::graph::SimpleGraph;

/// The separating osculator of a hyperplane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    /// `S(H)`.
    pub osculator: usize,
    /// `d(H)`.
    pub distance: usize,
    /// True when `S(H) = f(H)`.
    pub father_separated: bool,
}

/// Separating osculator of `data.hyperplane` relative to its grandfather.
///
/// At distance one two candidates may exist; the one whose imprint on the
/// grandfather is closer to the root wins, then the smaller id.
pub fn separating_osculator(tc: &TwoComplex, data: &FatherData, budget: usize) -> Result<Separation> {
    let c = tc.complex();
    let (u, h) = (data.grandfather, data.hyperplane);
    let distance = hyperplane_distance(c, u, h, budget)?;
    if distance == 0 {
        return Err(Error::NoSeparator(h));
    }
    let candidates: Vec<usize> = separators(c, u, h).into_iter().filter(|&w| c.contacts(w, h)).collect();
    let osculator = match candidates.len() {
        0 => return Err(Error::NoSeparator(h)),
        1 => candidates[0],
        2 if distance == 1 => {
            let tree_u = tc.tree(u);
            let root_depth = |w: usize| -> usize {
                tc.imprint(w, u)
                    .ok()
                    .and_then(|im| tree_u.top(&im.tree_vertices).map(|t| tree_u.depth(t)))
                    .unwrap_or(usize::MAX)
            };
            *candidates.iter().min_by_key(|&&w| (root_depth(w), w)).expect("two candidates")
        }
        k => return Err(Error::NonUniqueAtDepth2(h, k, distance)),
    };
    Ok(Separation { osculator, distance, father_separated: osculator == data.father })
}

/// Edge partition of Υ(U).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpsilonDecomposition {
    /// Grandfather `U`.
    pub grandfather: usize,
    /// Sorted `ℛ(U)`.
    pub nodes: Vec<usize>,
    /// All edges of Υ(U) as sorted hyperplane pairs.
    pub edges_all: Vec<(usize, usize)>,
    /// Remainder edges Υ₀.
    pub edges0: Vec<(usize, usize)>,
    /// Shared or self separating osculator edges Υ₁.
    pub edges1: Vec<(usize, usize)>,
    /// Father osculator edges Υ₂.
    pub edges2: Vec<(usize, usize)>,
    /// Separation data per node.
    pub separations: BTreeMap<usize, Separation>,
}

/// Builds Υ(U) from the father data of `ℛ(U)` and classifies its edges.
pub fn build_upsilon(tc: &TwoComplex, data: &[FatherData], budget: usize) -> Result<UpsilonDecomposition> {
    let c = tc.complex();
    let u = data.first().map_or(usize::MAX, |d| d.grandfather);
    let mut separations = BTreeMap::new();
    for d in data {
        separations.insert(d.hyperplane, separating_osculator(tc, d, budget)?);
    }
    let father: BTreeMap<usize, usize> = data.iter().map(|d| (d.hyperplane, d.father)).collect();
    let by_id: BTreeMap<usize, &FatherData> = data.iter().map(|d| (d.hyperplane, d)).collect();
    let s = |h: usize| separations[&h].osculator;
    let father_osculator = |x: usize, y: usize| {
        let fy = father[&y];
        !c.separates(x, y, u)
            && !c.separates(y, x, u)
            && c.contacts(x, y)
            && c.contacts(x, fy)
            && c.contacts(y, fy)
            && c.osculates(x, fy)
            && s(y) != fy
    };
    let nodes: Vec<usize> = by_id.keys().copied().collect();
    let mut dec = UpsilonDecomposition {
        grandfather: u,
        nodes: nodes.clone(),
        edges_all: Vec::new(),
        edges0: Vec::new(),
        edges1: Vec::new(),
        edges2: Vec::new(),
        separations: BTreeMap::new(),
    };
    for (i, &a) in nodes.iter().enumerate() {
        for &b in &nodes[i + 1..] {
            let (fa, fb) = (father[&a], father[&b]);
            if !c.contacts(a, b) || fa == fb || c.contacts(fa, fb) {
                continue;
            }
            dec.edges_all.push((a, b));
            if s(a) == s(b) || s(a) == b || s(b) == a {
                dec.edges1.push((a, b));
            } else if (precedes(tc, by_id[&b], by_id[&a]) && father_osculator(b, a))
                || (precedes(tc, by_id[&a], by_id[&b]) && father_osculator(a, b))
            {
                dec.edges2.push((a, b));
            } else {
                dec.edges0.push((a, b));
            }
        }
    }
    dec.separations = separations;
    Ok(dec)
}

/// Colouring of Υ(U) by triples `(c₀, c₁, c₂)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpsilonColouring {
    /// Triple per node.
    pub triples: BTreeMap<usize, (usize, usize, usize)>,
    /// Triples flattened to integers in sorted order.
    pub flat: BTreeMap<usize, usize>,
    /// Number of distinct triples.
    pub palette: usize,
    /// Colours used by the Υ₁ part.
    pub palette1: usize,
    /// Colours used by the Υ₂ part.
    pub palette2: usize,
}

fn local_graph(nodes: &[usize], edges: &[(usize, usize)]) -> SimpleGraph {
    let idx = |h: usize| nodes.binary_search(&h).expect("edge endpoint is a node");
    let e: Vec<_> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    SimpleGraph::new(nodes.len(), &e).expect("edges are simple")
}

/// Colours Υ(U): Υ₁ by imprints on the shared osculator, Υ₂ greedily along
/// ≺, Υ₀ by bipartition.
pub fn colour_upsilon(tc: &TwoComplex, dec: &UpsilonDecomposition, data: &[FatherData]) -> Result<UpsilonColouring> {
    let nodes = &dec.nodes;
    let n = nodes.len();
    let idx = |h: usize| nodes.binary_search(&h).expect("node");

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (&h, sep) in &dec.separations {
        groups.entry(sep.osculator).or_default().push(h);
    }
    let mut c1 = vec![usize::MAX; n];
    let mut pending: BTreeSet<usize> = groups.keys().copied().collect();
    while !pending.is_empty() {
        let ready = pending.iter().copied().find(|&w| match nodes.binary_search(&w) {
            Ok(i) => c1[i] != usize::MAX,
            Err(_) => true,
        });
        let Some(w) = ready else {
            return Err(Error::PostconditionFailed(format!(
                "separating osculators of {} form a cycle",
                dec.grandfather
            )));
        };
        pending.remove(&w);
        let skip = nodes.binary_search(&w).map_or(0, |i| c1[i]);
        let members = &groups[&w];
        let family = members.iter().map(|&h| tc.imprint(h, w)).collect::<Result<Vec<_>>>()?;
        let local = colour_imprints(tc.tree(w), &family, tc.delta())?;
        for (k, &h) in members.iter().enumerate() {
            let c = local.colours[k];
            c1[idx(h)] = if c >= skip { c + 1 } else { c };
        }
    }

    let g2 = local_graph(nodes, &dec.edges2);
    let mut c2 = vec![usize::MAX; n];
    for k in linear_extension(tc, data) {
        let i = idx(data[k].hyperplane);
        let used: BTreeSet<usize> = g2.neighbours(i).iter().map(|&j| c2[j]).collect();
        c2[i] = (0..).find(|x| !used.contains(x)).expect("free colour");
    }

    let g0 = local_graph(nodes, &dec.edges0);
    let c0 = g0.bipartition().map_err(|_| Error::OddCycleInUpsilon0(dec.grandfather))?;

    let mut triples = BTreeMap::new();
    for (i, &h) in nodes.iter().enumerate() {
        triples.insert(h, (usize::from(c0[i]), c1[i], c2[i]));
    }
    let distinct: BTreeSet<(usize, usize, usize)> = triples.values().copied().collect();
    let table: Vec<_> = distinct.into_iter().collect();
    let flat: BTreeMap<usize, usize> =
        triples.iter().map(|(&h, t)| (h, table.binary_search(t).expect("interned"))).collect();
    for &(a, b) in &dec.edges_all {
        if flat[&a] == flat[&b] {
            return Err(Error::ImproperColouring(a, b, flat[&a]));
        }
    }
    let count = |v: &[usize]| v.iter().collect::<BTreeSet<_>>().len();
    Ok(UpsilonColouring { palette: table.len(), palette1: count(&c1), palette2: count(&c2), triples, flat })
}
