//! Recursive colouring of contact-graph balls and of the whole contact
//! graph of a two-dimensional complex.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colouring::basic::{check_colouring, Colouring};
use crate::colouring::canonical::{canonical_paths, check_weak_combing};
use crate::colouring::distance::DEFAULT_CHAIN_BUDGET;
use crate::colouring::fathers::fathers;
use crate::colouring::grading::{grade, max_cluster_diameter, Grading};
use crate::colouring::upsilon::{build_upsilon, colour_upsilon};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::geometry::{colour_imprints, TwoComplex};
use crate::graph::SimpleGraph;

/// Largest cluster radius the global colouring accepts.
pub const MAX_CLUSTER_RADIUS: usize = 5;

/// Constant `M = 2·582613` of the palette bound.
pub const PALETTE_CONSTANT: u128 = 2 * 582_613;

/// The palette bound `M·Δ²⁶`, saturating at `u128::MAX`.
pub fn palette_bound(delta: usize) -> u128 {
    let mut b = PALETTE_CONSTANT;
    for _ in 0..26 {
        b = b.saturating_mul(delta as u128);
    }
    b
}

/// Palette and structure counts gathered while colouring.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    /// Largest palette of an imprint colouring.
    pub max_imprint_palette: usize,
    /// Largest Υ(U) palette.
    pub max_upsilon_palette: usize,
    /// Number of grandfathers whose Υ(U) was coloured.
    pub grandfathers: usize,
    /// Number of Υ edges per class `(Υ₀, Υ₁, Υ₂)`.
    pub upsilon_edges: (usize, usize, usize),
}

impl PipelineReport {
    fn merge(&mut self, other: &PipelineReport) {
        self.max_imprint_palette = self.max_imprint_palette.max(other.max_imprint_palette);
        self.max_upsilon_palette = self.max_upsilon_palette.max(other.max_upsilon_palette);
        self.grandfathers += other.grandfathers;
        self.upsilon_edges.0 += other.upsilon_edges.0;
        self.upsilon_edges.1 += other.upsilon_edges.1;
        self.upsilon_edges.2 += other.upsilon_edges.2;
    }
}

/// Colouring of a ball `B_r(V₀)` of the contact graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallColouring {
    /// Centre `V₀`.
    pub centre: usize,
    /// Radius `r`.
    pub radius: usize,
    /// Colour per hyperplane of the ball.
    pub colours: BTreeMap<usize, usize>,
    /// Number of distinct colours.
    pub num_colours: usize,
    /// Counts gathered on the way.
    pub report: PipelineReport,
}

type ColourKey = (usize, Vec<usize>);

/// Colours the ball of radius `radius` around `centre`.
///
/// Sphere 0 gets one colour and sphere 1 is coloured by imprints on the
/// centre. A hyperplane `H` of sphere `k ≥ 2` gets the quadruple formed by
/// the colours of its father and grandfather, an imprint colour among the
/// children of its father, and its Υ colour among the grandchildren of its
/// grandfather, with a fresh palette per sphere.
pub fn colour_ball(
    tc: &TwoComplex,
    gamma: &SimpleGraph,
    centre: usize,
    radius: usize,
    budget: usize,
) -> Result<BallColouring> {
    let c = tc.complex();
    let grading = grade(gamma, centre);
    let paths = canonical_paths(c, gamma, &grading, radius);
    let mut intern: HashMap<ColourKey, usize> = HashMap::new();
    let mut colour: BTreeMap<usize, usize> = BTreeMap::new();
    let mut report = PipelineReport::default();
    let mut assign = |h: usize, key: ColourKey, colour: &mut BTreeMap<usize, usize>| {
        let next = intern.len();
        let id = *intern.entry(key).or_insert(next);
        colour.insert(h, id);
    };
    assign(centre, (0, vec![0]), &mut colour);
    let top = radius.min(grading.max_grade());
    if top >= 1 {
        let sphere = &grading.spheres[1];
        let family = sphere.iter().map(|&h| tc.imprint(h, centre)).collect::<Result<Vec<_>>>()?;
        let local = colour_imprints(tc.tree(centre), &family, tc.delta())?;
        report.max_imprint_palette = report.max_imprint_palette.max(local.num_colours);
        for (i, &h) in sphere.iter().enumerate() {
            assign(h, (1, vec![local.colours[i]]), &mut colour);
        }
    }
    for k in 2..=top {
        let sphere = &grading.spheres[k];
        let mut by_grandfather: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &h in sphere {
            let g = paths[&h].grandfather().expect("grade at least two");
            by_grandfather.entry(g).or_default().push(h);
        }
        let mut father = BTreeMap::new();
        let mut upsilon = BTreeMap::new();
        for (&u, members) in &by_grandfather {
            let data = fathers(tc, u, members)?;
            let dec = build_upsilon(tc, &data, budget)?;
            let col = colour_upsilon(tc, &dec, &data)?;
            report.grandfathers += 1;
            report.max_upsilon_palette = report.max_upsilon_palette.max(col.palette);
            report.upsilon_edges.0 += dec.edges0.len();
            report.upsilon_edges.1 += dec.edges1.len();
            report.upsilon_edges.2 += dec.edges2.len();
            for d in &data {
                father.insert(d.hyperplane, d.father);
            }
            upsilon.extend(col.flat);
        }
        let mut children: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&h, &f) in &father {
            children.entry(f).or_default().push(h);
        }
        let mut sibling = BTreeMap::new();
        for (&v, members) in &children {
            let family = members.iter().map(|&h| tc.imprint(h, v)).collect::<Result<Vec<_>>>()?;
            let local = colour_imprints(tc.tree(v), &family, tc.delta())?;
            report.max_imprint_palette = report.max_imprint_palette.max(local.num_colours);
            for (i, &h) in members.iter().enumerate() {
                sibling.insert(h, local.colours[i]);
            }
        }
        for &h in sphere {
            let u = paths[&h].grandfather().expect("grade at least two");
            let key = vec![colour[&father[&h]], colour[&u], sibling[&h], upsilon[&h]];
            assign(h, (k, key), &mut colour);
        }
    }
    let num_colours = colour.values().collect::<BTreeSet<_>>().len();
    Ok(BallColouring { centre, radius, colours: colour, num_colours, report })
}

/// First edge of `gamma` inside the ball whose endpoints share a colour.
pub fn ball_conflict(gamma: &SimpleGraph, ball: &BallColouring) -> Option<(usize, usize)> {
    gamma
        .edges()
        .into_iter()
        .find(|&(a, b)| matches!((ball.colours.get(&a), ball.colours.get(&b)), (Some(x), Some(y)) if x == y))
}

/// Colouring of the whole contact graph with its diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactColouring {
    /// Proper colouring of the contact graph.
    pub colouring: Colouring,
    /// Maximum degree Δ.
    pub delta: usize,
    /// Palette bound `M·Δ²⁶` as a decimal string.
    pub palette_bound: String,
    /// Base hyperplane of the global grading.
    pub base: usize,
    /// Number of clusters coloured.
    pub clusters: usize,
    /// Largest radius of a cluster around its centre.
    pub max_cluster_radius: usize,
    /// Largest cluster diameter in the contact graph.
    pub max_cluster_diameter: usize,
    /// Counts gathered from all balls.
    pub report: PipelineReport,
}

/// Colours the contact graph of a two-dimensional complex.
///
/// Hyperplanes are graded from hyperplane 0. Each cluster is coloured by
/// the ball around its smallest member, with radius the cluster's
/// eccentricity, and restricted to the cluster. Even and odd spheres use
/// disjoint palettes. The result is always verified.
pub fn colour_contact_graph(tc: &TwoComplex, budget: usize) -> Result<ContactColouring> {
    let c = tc.complex();
    let delta = tc.delta();
    let m = c.m();
    let gamma = c.contact_simple_graph();
    if m <= 1 || delta <= 1 {
        return Ok(ContactColouring {
            colouring: Colouring::from_vec(vec![0; m]),
            delta,
            palette_bound: palette_bound(delta).to_string(),
            base: 0,
            clusters: usize::from(m > 0),
            max_cluster_radius: 0,
            max_cluster_diameter: 0,
            report: PipelineReport::default(),
        });
    }
    let grading = grade(&gamma, 0);
    let mut jobs = Vec::new();
    for (r, sphere) in grading.clusters.iter().enumerate() {
        for cluster in sphere {
            let centre = cluster[0];
            let d = gamma.bfs(centre);
            let radius = cluster.iter().map(|&h| d[h]).max().unwrap_or(0);
            if radius > MAX_CLUSTER_RADIUS {
                return Err(Error::ClusterTooWide(centre, radius));
            }
            jobs.push((r, cluster.clone(), centre, radius));
        }
    }
    let balls: Vec<Result<BallColouring>> =
        jobs.par_iter().map(|(_, _, centre, radius)| colour_ball(tc, &gamma, *centre, *radius, budget)).collect();
    let mut keys = vec![(0usize, 0usize); m];
    let mut report = PipelineReport::default();
    let mut max_radius = 0;
    for ((r, cluster, _, radius), ball) in jobs.iter().zip(balls) {
        let ball = ball?;
        report.merge(&ball.report);
        max_radius = max_radius.max(*radius);
        for &h in cluster {
            keys[h] = (r % 2, ball.colours[&h]);
        }
    }
    let table: Vec<(usize, usize)> = keys.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let colours: Vec<usize> = keys.iter().map(|k| table.binary_search(k).expect("interned")).collect();
    check_colouring(&gamma, &colours)?;
    Ok(ContactColouring {
        colouring: Colouring::from_vec(colours),
        delta,
        palette_bound: palette_bound(delta).to_string(),
        base: 0,
        clusters: jobs.len(),
        max_cluster_radius: max_radius,
        max_cluster_diameter: max_cluster_diameter(&gamma, &grading),
        report,
    })
}

/// Colours the contact graph with the default chain budget.
pub fn colour_contact_graph_default(tc: &TwoComplex) -> Result<ContactColouring> {
    colour_contact_graph(tc, DEFAULT_CHAIN_BUDGET)
}

/// True when `Δ ≤ Δ₀ + 2` for the given basepoint.
pub fn check_degree_bound(c: &Complex, basepoint: usize) -> bool {
    let delta = c.graph().graph().max_degree();
    let delta0 = (0..c.n()).map(|v| c.out_degree(basepoint, v)).max().unwrap_or(0);
    delta <= delta0 + 2
}

/// Global grading, canonical paths and weak combing violations of a complex,
/// for diagnostics.
pub fn combing_report(c: &Complex) -> (Grading, usize) {
    let gamma = c.contact_simple_graph();
    let grading = grade(&gamma, 0);
    let paths = canonical_paths(c, &gamma, &grading, grading.max_grade());
    let violations = check_weak_combing(c, &grading, &paths).len();
    (grading, violations)
}
