//! Axis-parallel boxes in three dimensions and Burling's triangle-free
//! families with large chromatic number.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::colouring::basic::exact_chromatic_number;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest `n` accepted by [`burling`]; `burling(3)` has 181 boxes.
pub const MAX_BURLING_N: usize = 3;

/// A closed box `[a', a''] × [b', b''] × [c', c'']` with integer corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Box3 {
    /// Per-axis intervals `[low, high]`.
    pub intervals: [[i64; 2]; 3],
}

impl Box3 {
    /// Builds a box after checking `0 ≤ low < high` on every axis.
    pub fn new(intervals: [[i64; 2]; 3]) -> Result<Self> {
        for (axis, [lo, hi]) in intervals.iter().enumerate() {
            if *lo < 0 || lo >= hi {
                return Err(Error::InvalidInput(format!("axis {axis} interval [{lo}, {hi}] is not valid")));
            }
        }
        Ok(Box3 { intervals })
    }

    /// True when the closed boxes share a point.
    pub fn intersects(&self, other: &Box3) -> bool {
        (0..3).all(|i| self.intervals[i][0] <= other.intervals[i][1] && other.intervals[i][0] <= self.intervals[i][1])
    }

    /// True when `p` lies in the closed box.
    pub fn contains_point(&self, p: [i64; 3]) -> bool {
        (0..3).all(|i| self.intervals[i][0] <= p[i] && p[i] <= self.intervals[i][1])
    }
}

/// Clique and chromatic numbers of a box family's intersection graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxStats {
    /// Exact clique number ω(ℬ).
    pub omega: usize,
    /// Exact chromatic number χ(ℬ), when the oracle finished within budget.
    pub chi: Option<usize>,
}

/// A finite family of boxes with its certified statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxFamily {
    /// The boxes.
    pub boxes: Vec<Box3>,
    /// Statistics of the intersection graph.
    pub stats: BoxStats,
}

impl BoxFamily {
    /// Wraps `boxes` and computes ω exactly and χ within `oracle_budget`.
    pub fn new(boxes: Vec<Box3>, oracle_budget: u64) -> Result<Self> {
        let g = intersection_graph(&boxes);
        let omega = g.clique_number();
        let chi = match exact_chromatic_number(&g, oracle_budget) {
            Ok(c) => Some(c),
            Err(e) if e.is_budget() => None,
            Err(e) => return Err(e),
        };
        Ok(BoxFamily { boxes, stats: BoxStats { omega, chi } })
    }

    /// Intersection graph of the boxes.
    pub fn intersection_graph(&self) -> SimpleGraph {
        intersection_graph(&self.boxes)
    }
}

/// Intersection graph of closed boxes.
pub fn intersection_graph(boxes: &[Box3]) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            if boxes[i].intersects(&boxes[j]) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(boxes.len(), &edges).expect("pairs are distinct")
}

/// A probe of a Burling scene: a box meeting exactly its roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probe {
    /// The probe box.
    pub region: Box3,
    /// Sorted indices of the boxes meeting the probe.
    pub roots: Vec<usize>,
}

/// A Burling family together with its probes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurlingScene {
    /// The family.
    pub boxes: Vec<Box3>,
    /// Probes; every proper colouring with `k` colours has a probe whose
    /// roots see `k` colours, where `k` is the recursion depth.
    pub probes: Vec<Probe>,
}

#[derive(Debug, Clone, Copy)]
struct FBox {
    lo: [f64; 3],
    hi: [f64; 3],
}

impl FBox {
    fn new(x: [f64; 2], y: [f64; 2], z: [f64; 2]) -> Self {
        FBox { lo: [x[0], y[0], z[0]], hi: [x[1], y[1], z[1]] }
    }

    fn map_into(&self, from: &FBox, to: &FBox) -> FBox {
        let mut out = *self;
        for i in 0..3 {
            let s = (to.hi[i] - to.lo[i]) / (from.hi[i] - from.lo[i]);
            out.lo[i] = to.lo[i] + (self.lo[i] - from.lo[i]) * s;
            out.hi[i] = to.lo[i] + (self.hi[i] - from.lo[i]) * s;
        }
        out
    }
}

#[derive(Debug, Clone)]
struct FProbe {
    region: FBox,
    hole: FBox,
    kappa: f64,
    roots: Vec<usize>,
}

/// Scene invariants: every probe reaches the `x` and `z` maxima of `bbox`;
/// its hole is empty, spans the probe's `y` range and reaches its `x`
/// maximum; every root covers `[hole.lo.x, kappa] × hole.y` at heights
/// above the hole.
#[derive(Debug, Clone)]
struct FScene {
    bbox: FBox,
    boxes: Vec<FBox>,
    probes: Vec<FProbe>,
}

fn base_scene() -> FScene {
    let bbox = FBox::new([0.0, 10.0], [0.0, 10.0], [0.0, 10.0]);
    let root = FBox::new([0.0, 10.0], [0.0, 10.0], [8.0, 9.0]);
    let hole = FBox::new([0.0, 10.0], [0.0, 10.0], [1.0, 7.0]);
    FScene { bbox, boxes: vec![root], probes: vec![FProbe { region: bbox, hole, kappa: 10.0, roots: vec![0] }] }
}

fn lerp(a: f64, b: f64, t: f64) -> f64 {
    a + (b - a) * t
}

fn step(f: &FScene) -> FScene {
    let mut boxes = f.boxes.clone();
    let mut probes = Vec::new();
    for p in &f.probes {
        let h = &p.hole;
        let target = FBox::new(
            [lerp(h.lo[0], p.kappa, 0.1), lerp(h.lo[0], p.kappa, 0.7)],
            [lerp(h.lo[1], h.hi[1], 0.1), lerp(h.lo[1], h.hi[1], 0.9)],
            [lerp(h.lo[2], h.hi[2], 0.1), lerp(h.lo[2], h.hi[2], 0.7)],
        );
        let offset = boxes.len();
        boxes.extend(f.boxes.iter().map(|b| b.map_into(&f.bbox, &target)));
        let (px_max, pz_max) = (p.region.hi[0], p.region.hi[2]);
        let (cx_max, cz_min, cz_max) = (target.hi[0], target.lo[2], target.hi[2]);
        for q in &f.probes {
            let qr = q.region.map_into(&f.bbox, &target);
            let qh = q.hole.map_into(&f.bbox, &target);
            let kappa_q = lerp(target.lo[0], target.hi[0], (q.kappa - f.bbox.lo[0]) / (f.bbox.hi[0] - f.bbox.lo[0]));
            let tee: Vec<usize> = q.roots.iter().map(|r| r + offset).collect();
            let (y0, y1) = (qr.lo[1], qr.hi[1]);
            let y_one = [y0, lerp(y0, y1, 0.4)];
            let y_diag = [lerp(y0, y1, 0.5), y1];
            let y_two = [lerp(y0, y1, 0.6), y1];

            let mut roots_one: Vec<usize> = tee.iter().chain(&p.roots).copied().collect();
            roots_one.sort_unstable();
            probes.push(FProbe {
                region: FBox::new([qr.lo[0], px_max], y_one, [qr.lo[2], pz_max]),
                hole: FBox::new([qh.lo[0], px_max], y_one, [qh.lo[2], qh.hi[2]]),
                kappa: kappa_q,
                roots: roots_one,
            });

            let diag = boxes.len();
            boxes.push(FBox::new([0.5 * (qh.lo[0] + kappa_q), px_max], y_diag, [qh.hi[2], lerp(cz_max, h.hi[2], 0.5)]));
            let x_two = lerp(cx_max, p.kappa, 0.5);
            let mut roots_two: Vec<usize> = p.roots.iter().copied().chain([diag]).collect();
            roots_two.sort_unstable();
            probes.push(FProbe {
                region: FBox::new([x_two, px_max], y_two, [cz_min, pz_max]),
                hole: FBox::new([x_two, px_max], y_two, [cz_min, lerp(cz_min, qh.hi[2], 0.5)]),
                kappa: p.kappa,
                roots: roots_two,
            });
        }
    }
    FScene { bbox: f.bbox, boxes, probes }
}

/// Replaces coordinates by ranks, merging consecutive values on an axis
/// whenever no overlap relation changes.
fn compress(boxes: &[FBox], probes: &[FBox]) -> (Vec<Box3>, Vec<Box3>) {
    let all: Vec<&FBox> = boxes.iter().chain(probes).collect();
    let mut maps: Vec<Vec<(f64, i64)>> = Vec::new();
    for axis in 0..3 {
        let mut values: Vec<f64> = all.iter().flat_map(|b| [b.lo[axis], b.hi[axis]]).collect();
        values.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        values.dedup();
        let lows: HashSet<u64> = all.iter().map(|b| b.lo[axis].to_bits()).collect();
        let mut lows_of_high: HashMap<u64, Vec<u64>> = HashMap::new();
        for b in &all {
            lows_of_high.entry(b.hi[axis].to_bits()).or_default().push(b.lo[axis].to_bits());
        }
        let mut map = Vec::with_capacity(values.len());
        let mut rank = 0i64;
        let mut group: HashSet<u64> = HashSet::new();
        let mut group_has_high = false;
        for &v in &values {
            let key = v.to_bits();
            let degenerate = lows_of_high.get(&key).is_some_and(|l| l.iter().any(|x| group.contains(x)));
            if degenerate || (group_has_high && lows.contains(&key)) {
                rank += 1;
                group.clear();
                group_has_high = false;
            }
            group.insert(key);
            group_has_high |= lows_of_high.contains_key(&key);
            map.push((v, rank));
        }
        maps.push(map);
    }
    let conv = |b: &FBox| {
        let mut iv = [[0i64; 2]; 3];
        for axis in 0..3 {
            let find = |v: f64| {
                let i = maps[axis].partition_point(|&(w, _)| w < v);
                maps[axis][i].1
            };
            iv[axis] = [find(b.lo[axis]), find(b.hi[axis])];
        }
        Box3 { intervals: iv }
    };
    (boxes.iter().map(conv).collect(), probes.iter().map(conv).collect())
}

/// Burling scene of recursion depth `k ≥ 1`: `k = 1` is one box.
pub fn burling_scene(k: usize) -> Result<BurlingScene> {
    if k == 0 || k > MAX_BURLING_N + 1 {
        return Err(Error::InvalidParams(format!("depth {k} is outside 1..={}", MAX_BURLING_N + 1)));
    }
    let mut scene = base_scene();
    for _ in 1..k {
        scene = step(&scene);
    }
    let regions: Vec<FBox> = scene.probes.iter().map(|p| p.region).collect();
    let (boxes, probe_boxes) = compress(&scene.boxes, &regions);
    let probes = probe_boxes
        .into_iter()
        .zip(&scene.probes)
        .map(|(region, p)| Probe { region, roots: p.roots.clone() })
        .collect();
    let out = BurlingScene { boxes, probes };
    check_scene(&out)?;
    Ok(out)
}

/// Checks that the family is triangle-free, probes are pairwise disjoint
/// and every probe meets exactly its roots, which are pairwise disjoint.
pub fn check_scene(scene: &BurlingScene) -> Result<()> {
    let fail = |m: String| Error::PostconditionFailed(m);
    let g = intersection_graph(&scene.boxes);
    let bits = g.adjacency_bitsets();
    for (u, v) in g.edges() {
        if !bits[u].is_disjoint(&bits[v]) {
            return Err(fail(format!("boxes {u} and {v} lie in a triangle")));
        }
    }
    for (i, p) in scene.probes.iter().enumerate() {
        let met: Vec<usize> = (0..scene.boxes.len()).filter(|&b| scene.boxes[b].intersects(&p.region)).collect();
        if met != p.roots {
            return Err(fail(format!("probe {i} meets {met:?}, expected {:?}", p.roots)));
        }
        for (a, &r) in p.roots.iter().enumerate() {
            if p.roots[a + 1..].iter().any(|&s| g.has_edge(r, s)) {
                return Err(fail(format!("roots of probe {i} are not independent")));
            }
        }
        for (j, q) in scene.probes.iter().enumerate().skip(i + 1) {
            if p.region.intersects(&q.region) {
                return Err(fail(format!("probes {i} and {j} meet")));
            }
        }
    }
    Ok(())
}

/// Burling family `ℬ_n` with ω = 2 (for `n ≥ 2`) and χ > n; its statistics
/// are certified by the exact oracles within `oracle_budget`.
pub fn burling(n: usize, oracle_budget: u64) -> Result<BoxFamily> {
    if n == 0 || n > MAX_BURLING_N {
        return Err(Error::BudgetExceeded(format!("burling({n}) is outside 1..={MAX_BURLING_N}")));
    }
    let scene = burling_scene(n + 1)?;
    BoxFamily::new(scene.boxes, oracle_budget)
}
