//! Brute-force oracles used by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use cubeforest::constructions::{random_square_complex, square_union, RandomParams};
use cubeforest::{Complex, MedianGraph, SimpleGraph};

pub const UNSEEN: usize = usize::MAX;

/// BFS distances restricted to `allowed`.
pub fn bfs_in(g: &SimpleGraph, src: usize, allowed: &[bool]) -> Vec<usize> {
    let mut d = vec![UNSEEN; g.n()];
    d[src] = 0;
    let mut q = VecDeque::from([src]);
    while let Some(x) = q.pop_front() {
        for &y in g.neighbours(x) {
            if allowed[y] && d[y] == UNSEEN {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
        }
    }
    d
}

pub fn all_pairs(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let all = vec![true; g.n()];
    (0..g.n()).map(|v| bfs_in(g, v, &all)).collect()
}

/// Median test straight from the definition.
pub fn brute_is_median(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    let d = all_pairs(g);
    if d[0].contains(&UNSEEN) {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let count = (0..n)
                    .filter(|&m| {
                        d[a][m] + d[m][b] == d[a][b] && d[b][m] + d[m][c] == d[b][c] && d[a][m] + d[m][c] == d[a][c]
                    })
                    .count();
                if count != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Θ-classes as the transitive closure of the Djoković–Winkler relation.
pub fn brute_theta(g: &SimpleGraph) -> BTreeSet<BTreeSet<(usize, usize)>> {
    let d = all_pairs(g);
    let edges = g.edges();
    let k = edges.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..k {
        for j in 0..k {
            let ((u, v), (x, y)) = (edges[i], edges[j]);
            if d[u][x] + d[v][y] != d[u][y] + d[v][x] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut classes = BTreeMap::<usize, BTreeSet<(usize, usize)>>::new();
    for (i, &e) in edges.iter().enumerate() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().insert(e);
    }
    classes.into_values().collect()
}

/// Hyperplane data computed from the edge classes alone.
pub struct Plain {
    pub sides: Vec<Vec<bool>>,
    pub carriers: Vec<Vec<bool>>,
}

impl Plain {
    pub fn new(c: &Complex) -> Self {
        let n = c.n();
        let sides = c
            .hyperplanes()
            .iter()
            .map(|h| {
                let mut s = vec![false; n];
                for &v in &h.half_b {
                    s[v] = true;
                }
                s
            })
            .collect();
        let carriers = c
            .hyperplanes()
            .iter()
            .map(|h| {
                let mut s = vec![false; n];
                for &(a, b) in &h.edges {
                    s[a] = true;
                    s[b] = true;
                }
                s
            })
            .collect();
        Plain { sides, carriers }
    }

    pub fn m(&self) -> usize {
        self.sides.len()
    }

    pub fn crosses(&self, a: usize, b: usize) -> bool {
        let n = self.sides[a].len();
        [(false, false), (false, true), (true, false), (true, true)]
            .iter()
            .all(|&(x, y)| (0..n).any(|v| self.sides[a][v] == x && self.sides[b][v] == y))
    }

    pub fn contacts(&self, a: usize, b: usize) -> bool {
        a != b && (0..self.sides[a].len()).any(|v| self.carriers[a][v] && self.carriers[b][v])
    }

    /// True when `w` puts the carriers of `a` and `b` on opposite sides.
    pub fn separates(&self, w: usize, a: usize, b: usize) -> bool {
        let side = |h: usize| -> Option<bool> {
            let vals: BTreeSet<bool> =
                (0..self.sides[w].len()).filter(|&v| self.carriers[h][v]).map(|v| self.sides[w][v]).collect();
            (vals.len() == 1).then(|| *vals.iter().next().unwrap())
        };
        w != a && w != b && matches!((side(a), side(b)), (Some(x), Some(y)) if x != y)
    }
}

/// Minimum size over maximal inseparable pairwise non-crossing sets of
/// hyperplanes separating `h` from `u`, by enumerating every subset.
pub fn brute_distance(p: &Plain, u: usize, h: usize) -> usize {
    if u == h || p.contacts(u, h) {
        return 0;
    }
    let seps: Vec<usize> = (0..p.m()).filter(|&w| p.separates(w, u, h)).collect();
    let k = seps.len();
    assert!(k <= 16, "oracle limited to 16 separators");
    let valid = |mask: u32| -> bool {
        if mask == 0 {
            return false;
        }
        let members: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| seps[i]).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if p.crosses(a, b) {
                    return false;
                }
                for w in 0..p.m() {
                    if p.separates(w, a, b) && !members.contains(&w) {
                        return false;
                    }
                }
            }
        }
        true
    };
    let good: Vec<u32> = (1u32..1 << k).filter(|&m| valid(m)).collect();
    good.iter()
        .filter(|&&m| !good.iter().any(|&o| o != m && o & m == m))
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("a single separator is inseparable")
}

/// Least `(weight, path)` over every Γ-geodesic from `base` to `h` and
/// every choice of realisation points.
pub fn brute_canonical(p: &Plain, g: &SimpleGraph, base: usize, h: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let m = p.m();
    let gamma: Vec<Vec<usize>> = (0..m).map(|a| (0..m).filter(|&b| p.contacts(a, b)).collect()).collect();
    let mut grade = vec![UNSEEN; m];
    grade[base] = 0;
    let mut q = VecDeque::from([base]);
    while let Some(a) = q.pop_front() {
        for &b in &gamma[a] {
            if grade[b] == UNSEEN {
                grade[b] = grade[a] + 1;
                q.push_back(b);
            }
        }
    }
    if grade[h] == UNSEEN || grade[h] == 0 {
        return None;
    }
    let mut geodesics = vec![vec![base]];
    for r in 1..=grade[h] {
        geodesics = geodesics
            .into_iter()
            .flat_map(|pre| {
                let last = *pre.last().unwrap();
                gamma[last]
                    .iter()
                    .filter(|&&b| grade[b] == r && (r < grade[h] || b == h))
                    .map(|&b| {
                        let mut next = pre.clone();
                        next.push(b);
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let n = g.n();
    let carrier_dist = |hp: usize, a: usize, b: usize| -> usize { bfs_in(g, a, &p.carriers[hp])[b] };
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for geo in geodesics {
        let r = geo.len() - 1;
        let choices: Vec<Vec<usize>> =
            (0..r).map(|i| (0..n).filter(|&v| p.carriers[geo[i]][v] && p.carriers[geo[i + 1]][v]).collect()).collect();
        let mut pick = vec![0usize; r];
        loop {
            let xs: Vec<usize> = (0..r).map(|i| choices[i][pick[i]]).collect();
            let weight: Vec<usize> = (1..r).rev().map(|i| carrier_dist(geo[i], xs[i - 1], xs[i])).collect();
            let cand = (weight, geo.clone());
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
            let mut i = 0;
            while i < r {
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if i == r {
                break;
            }
        }
    }
    best
}

/// Complexes with at most eight hyperplanes.
pub fn small_instances() -> Vec<(String, MedianGraph)> {
    let mut out: Vec<(String, MedianGraph)> =
        super::corpus().into_iter().filter(|(_, g)| Complex::new(g.clone()).unwrap().m() <= 8).collect();
    for seed in 0..12 {
        let g = random_square_complex(seed, RandomParams { squares: 5, max_vertices: 40 }).unwrap();
        if Complex::new(g.clone()).unwrap().m() <= 8 {
            out.push((format!("small random {seed}"), g));
        }
    }
    out.push(("wedge".into(), square_union(&[(0, 0), (1, 1)]).unwrap()));
    out.push(("ell".into(), square_union(&[(0, 0), (1, 0), (0, 1)]).unwrap()));
    out
}

/// Chromatic number by trying every assignment with `k` colours.
pub fn brute_chromatic(g: &SimpleGraph) -> usize {
    let n = g.n();
    let edges = g.edges();
    (1..=n.max(1))
        .find(|&k| {
            let total = k.pow(n as u32);
            (0..total).any(|mut code| {
                let mut col = vec![0; n];
                for c in col.iter_mut() {
                    *c = code % k;
                    code /= k;
                }
                edges.iter().all(|&(a, b)| col[a] != col[b])
            })
        })
        .unwrap()
}

pub fn complete(n: usize) -> SimpleGraph {
    let e: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    SimpleGraph::new(n, &e).unwrap()
}

pub fn complete_bipartite(m: usize, n: usize) -> SimpleGraph {
    let e: Vec<(usize, usize)> = (0..m).flat_map(|a| (0..n).map(move |b| (a, m + b))).collect();
    SimpleGraph::new(m + n, &e).unwrap()
}

/// An event structure on `0..n` given by its strict causal pairs and
/// conflict pairs, both as `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RawEvents {
    pub n: usize,
    pub causality: Vec<(usize, usize)>,
    pub conflict: Vec<(usize, usize)>,
}

/// One representative of every isomorphism class of valid event structures
/// with `n` events.
///
/// Structures whose causality refines the integer order are enumerated and
/// reduced to the least code over their linear extensions.
pub fn event_structures(n: usize) -> Vec<RawEvents> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut codes = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let mut lt = vec![vec![false; n]; n];
        for (t, &(a, b)) in pairs.iter().enumerate() {
            lt[a][b] = mask >> t & 1 == 1;
        }
        let transitive = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(lt[a][b] && lt[b][c]) || lt[a][c])));
        if !transitive {
            continue;
        }
        let free: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(a, b)| !lt[a][b]).collect();
        for cmask in 0u32..1 << free.len() {
            let mut cf = vec![vec![false; n]; n];
            for (t, &(a, b)) in free.iter().enumerate() {
                if cmask >> t & 1 == 1 {
                    cf[a][b] = true;
                    cf[b][a] = true;
                }
            }
            let inherited = (0..n).all(|a| (0..n).all(|b| !cf[a][b] || (0..n).all(|c| !lt[b][c] || cf[a][c])));
            if inherited {
                codes.insert(least_code(n, &lt, &cf));
            }
        }
    }
    let mut codes: Vec<u64> = codes.into_iter().collect();
    codes.sort_unstable();
    codes.into_iter().map(|code| decode(n, code)).collect()
}

/// Digit of the pair of events `(x, y)` placed at labels `i < j`.
fn digit(lt: &[Vec<bool>], cf: &[Vec<bool>], x: usize, y: usize) -> u64 {
    if lt[x][y] {
        1
    } else if cf[x][y] {
        2
    } else {
        0
    }
}

fn least_code(n: usize, lt: &[Vec<bool>], cf: &[Vec<bool>]) -> u64 {
    let mut search = CodeSearch {
        n,
        total: n * (n - 1) / 2,
        lt,
        cf,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: u64::MAX,
    };
    search.run(0, 0);
    search.best
}

/// Branch and bound over linear extensions for the least pair code.
struct CodeSearch<'a> {
    n: usize,
    total: usize,
    lt: &'a [Vec<bool>],
    cf: &'a [Vec<bool>],
    order: Vec<usize>,
    used: Vec<bool>,
    best: u64,
}

impl CodeSearch<'_> {
    fn run(&mut self, code: u64, digits: usize) {
        if self.best != u64::MAX && code > self.best >> (2 * (self.total - digits)) {
            return;
        }
        if self.order.len() == self.n {
            self.best = self.best.min(code);
            return;
        }
        for y in 0..self.n {
            if self.used[y] || (0..self.n).any(|x| !self.used[x] && self.lt[x][y]) {
                continue;
            }
            let mut next = code;
            for &x in &self.order {
                next = next << 2 | digit(self.lt, self.cf, x, y);
            }
            let added = self.order.len();
            self.used[y] = true;
            self.order.push(y);
            self.run(next, digits + added);
            self.order.pop();
            self.used[y] = false;
        }
    }
}

fn decode(n: usize, code: u64) -> RawEvents {
    let mut order = Vec::new();
    for j in 0..n {
        for i in 0..j {
            order.push((i, j));
        }
    }
    let mut raw = RawEvents { n, causality: Vec::new(), conflict: Vec::new() };
    for (t, &(i, j)) in order.iter().enumerate() {
        match code >> (2 * (order.len() - 1 - t)) & 3 {
            1 => raw.causality.push((i, j)),
            2 => raw.conflict.push((i, j)),
            _ => {}
        }
    }
    raw
}

/// Configurations of a structure: conflict-free sets closed under causes,
/// as bitmasks.
pub fn configurations(raw: &RawEvents) -> Vec<u32> {
    let n = raw.n;
    let mut below = vec![0u32; n];
    for &(a, b) in &raw.causality {
        below[b] |= 1 << a;
    }
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|e| s >> e & 1 == 0 || below[e] & !s == 0)
                && raw.conflict.iter().all(|&(a, b)| !(s >> a & 1 == 1 && s >> b & 1 == 1))
        })
        .collect()
}

/// True when two events enabled at a common configuration never share a
/// label.
pub fn brute_is_nice(raw: &RawEvents, labels: &[usize]) -> bool {
    let configs: BTreeSet<u32> = configurations(raw).into_iter().collect();
    configs.iter().all(|&x| {
        let enabled: Vec<usize> = (0..raw.n).filter(|&e| x >> e & 1 == 0 && configs.contains(&(x | 1 << e))).collect();
        enabled.iter().enumerate().all(|(i, &a)| enabled[i + 1..].iter().all(|&b| labels[a] != labels[b]))
    })
}

/// Largest number of events enabled at one configuration.
pub fn brute_degree(raw: &RawEvents) -> usize {
    let configs: BTreeSet<u32> = configurations(raw).into_iter().collect();
    configs
        .iter()
        .map(|&x| (0..raw.n).filter(|&e| x >> e & 1 == 0 && configs.contains(&(x | 1 << e))).count())
        .max()
        .unwrap_or(0)
}

/// The tree of a hyperplane rebuilt from squares: class edges adjacent when
/// opposite in a 4-cycle. Returns the sorted class edges and all-pairs tree
/// distances.
pub fn brute_tree(g: &SimpleGraph, class: &[(usize, usize)]) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let mut verts: Vec<(usize, usize)> = class.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    verts.sort_unstable();
    let k = verts.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let ((a, b), (c, d)) = (verts[i], verts[j]);
            if (g.has_edge(a, c) && g.has_edge(b, d)) || (g.has_edge(a, d) && g.has_edge(b, c)) {
                edges.push((i, j));
            }
        }
    }
    let t = SimpleGraph::new(k, &edges).unwrap();
    (verts, all_pairs(&t))
}

/// Tree vertices of a hyperplane, given by its sorted class edges `verts`,
/// met by the carrier of `owner`.
pub fn brute_imprint(p: &Plain, verts: &[(usize, usize)], owner: usize) -> Vec<usize> {
    (0..verts.len())
        .filter(|&t| {
            let (a, b) = verts[t];
            p.carriers[owner][a] || p.carriers[owner][b]
        })
        .collect()
}

/// Father of `h` relative to `u` by minimising over every potential father:
/// distance from the root of `u` to the imprint, then the tree distance on
/// the father between the imprints of `h` and `u`, then the id.
pub fn brute_father(c: &Complex, p: &Plain, u: usize, h: usize) -> usize {
    let g = c.graph().graph();
    let (verts_u, du) = brute_tree(g, &c.hyperplane(u).edges);
    let pf: Vec<usize> = (0..p.m()).filter(|&v| v != u && v != h && p.contacts(v, u) && p.contacts(v, h)).collect();
    let set_dist = |d: &Vec<Vec<usize>>, a: &[usize], b: &[usize]| {
        a.iter().flat_map(|&x| b.iter().map(move |&y| d[x][y])).min().unwrap()
    };
    pf.into_iter()
        .map(|v| {
            let on_u = brute_imprint(p, &verts_u, v);
            let (verts_v, dv) = brute_tree(g, &c.hyperplane(v).edges);
            (
                set_dist(&du, &[0], &on_u),
                set_dist(&dv, &brute_imprint(p, &verts_v, h), &brute_imprint(p, &verts_v, u)),
                v,
            )
        })
        .min()
        .expect("potential fathers exist")
        .2
}
