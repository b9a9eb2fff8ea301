//! Acceptance suite: one PASS/FAIL line per primary criterion.
#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use common::brute::*;
use cubeforest::colouring::basic::{exact_colouring, greedy_colour};
use cubeforest::colouring::canonical::check_weak_combing;
use cubeforest::colouring::distance::DEFAULT_CHAIN_BUDGET;
use cubeforest::colouring::grading::max_cluster_diameter;
use cubeforest::colouring::{
    canonical_paths, check_degree_bound, colour_ball, colour_contact_graph, exact_chromatic_number, grade,
    hyperplane_distance, palette_bound, verify_colouring,
};
use cubeforest::constructions::wallspace::DEFAULT_ORIENTATION_BUDGET;
use cubeforest::constructions::{
    burling, lifted_complex, path, recubulate, recubulation_degree_bound, theorem2_family, verify_recubulation,
};
use cubeforest::embedding::{embed_in_trees, verify_isometry};
use cubeforest::events::{
    domain, from_pointed_complex, nice_label, round_trip_certificate, verify_nice, EventStructure, LabelMethod,
    DEFAULT_CONFIG_BUDGET,
};
use cubeforest::geometry::{pointed_contact_graph, TwoComplex};
use cubeforest::median::median_by_structure;
use cubeforest::{is_median_graph, Complex, MedianGraph, SimpleGraph};

const COLOURING_LIMIT: Duration = Duration::from_secs(60);
const EMBEDDING_LIMIT: Duration = Duration::from_secs(10);
const FAMILY_LIMIT: Duration = Duration::from_secs(300);
const ORACLE_BUDGET: u64 = 20_000_000;
const MAX_EVENTS: usize = 6;

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn two_complex(name: &str, g: &MedianGraph) -> Result<TwoComplex, String> {
    let c = Complex::new(g.clone()).map_err(|e| format!("{name}: {e}"))?;
    TwoComplex::new(c).map_err(|e| format!("{name}: {e}"))
}

fn proper_colouring_suite(corpus: &[(String, MedianGraph)]) -> Verdict {
    ensure(corpus.len() >= 30, || format!("corpus has {} instances", corpus.len()))?;
    let start = Instant::now();
    for (name, g) in corpus {
        ensure(g.n() <= 150 || !name.starts_with("random"), || format!("{name} has {} vertices", g.n()))?;
        let tc = two_complex(name, g)?;
        ensure(tc.complex().is_two_dimensional(), || format!("{name} is not two-dimensional"))?;
        let col = colour_contact_graph(&tc, DEFAULT_CHAIN_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        let gamma = contact_graph_oracle(tc.complex());
        ensure(verify_colouring(&gamma, &col.colouring), || format!("{name}: improper colouring"))?;
        ensure(gamma.edges().iter().all(|&(a, b)| col.colouring.colours[a] != col.colouring.colours[b]), || {
            format!("{name}: edge scan found a conflict")
        })?;
    }
    let t = start.elapsed();
    ensure(t < COLOURING_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("{} instances, {:.1}s", corpus.len(), t.as_secs_f64()))
}

/// Contact graph recomputed from carriers.
fn contact_graph_oracle(c: &Complex) -> SimpleGraph {
    let p = Plain::new(c);
    let m = p.m();
    let edges: Vec<(usize, usize)> =
        (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).filter(|&(a, b)| p.contacts(a, b)).collect();
    SimpleGraph::new(m, &edges).unwrap()
}

fn structural_invariants(corpus: &[(String, MedianGraph)]) -> Verdict {
    let mut balls = 0;
    let mut grandfathers = 0;
    for (name, g) in corpus {
        let tc = two_complex(name, g)?;
        let c = tc.complex();
        let delta = g.graph().max_degree();
        let gamma = c.contact_simple_graph();
        ensure(gamma.clique_number() == delta, || format!("{name}: ω(Γ) = {} but Δ = {delta}", gamma.clique_number()))?;
        let cross = c.crossing_graph();
        for v in 0..c.n() {
            let pointed = pointed_contact_graph(c, v).map_err(|e| e.to_string())?.graph();
            ensure(cross.is_subgraph_of(&pointed) && pointed.is_subgraph_of(&gamma), || {
                format!("{name}: Γ# ⊆ Γ_{v} ⊆ Γ fails")
            })?;
            ensure(check_degree_bound(c, v), || format!("{name}: Δ > Δ₀ + 2 at basepoint {v}"))?;
        }
        for base in 0..c.m() {
            let grading = grade(&gamma, base);
            let diam = max_cluster_diameter(&gamma, &grading);
            ensure(diam <= 5, || format!("{name}: cluster diameter {diam} from base {base}"))?;
            let paths = canonical_paths(c, &gamma, &grading, grading.max_grade());
            let bad = check_weak_combing(c, &grading, &paths);
            ensure(bad.is_empty(), || format!("{name}: weak combing fails from base {base}: {:?}", bad[0]))?;
            let radius = grading.max_grade().min(5);
            let ball = colour_ball(&tc, &gamma, base, radius, DEFAULT_CHAIN_BUDGET)
                .map_err(|e| format!("{name}: ball around {base}: {e}"))?;
            ensure(ball.report.max_imprint_palette <= 2 * delta, || {
                format!("{name}: imprint palette {} exceeds 2Δ = {}", ball.report.max_imprint_palette, 2 * delta)
            })?;
            balls += 1;
            grandfathers += ball.report.grandfathers;
        }
    }
    Ok(format!("{} instances, {balls} balls, {grandfathers} grandfathers with bipartite Υ₀", corpus.len()))
}

fn oracle_equivalence() -> Verdict {
    let mut paths = 0;
    let mut distances = 0;
    let instances = small_instances();
    for (name, g) in &instances {
        let c = Complex::new(g.clone()).map_err(|e| e.to_string())?;
        ensure(c.m() <= 8, || format!("{name} has {} hyperplanes", c.m()))?;
        let p = Plain::new(&c);
        let gamma = c.contact_simple_graph();
        for base in 0..c.m() {
            let grading = grade(&gamma, base);
            let found = canonical_paths(&c, &gamma, &grading, grading.max_grade());
            for h in 0..c.m() {
                let want = brute_canonical(&p, g.graph(), base, h).map(|(w, _)| w);
                let got = found.get(&h).map(|cp| cp.weight.clone());
                ensure(got == want, || format!("{name}: weight of {h} from {base}: {got:?} vs {want:?}"))?;
                paths += usize::from(got.is_some());
                let d = hyperplane_distance(&c, base, h, DEFAULT_CHAIN_BUDGET).map_err(|e| e.to_string())?;
                let want = brute_distance(&p, base, h);
                ensure(d == want, || format!("{name}: d({h}) from {base}: {d} vs {want}"))?;
                distances += 1;
            }
        }
    }
    let chi = |g: &SimpleGraph| exact_chromatic_number(g, ORACLE_BUDGET).map_err(|e| e.to_string());
    ensure(chi(&complete(4))? == 4, || "χ(K4) ≠ 4".into())?;
    ensure(chi(&common::c5())? == 3, || "χ(C5) ≠ 3".into())?;
    for (m, n) in [(1, 1), (2, 2), (3, 5), (6, 6)] {
        ensure(chi(&complete_bipartite(m, n))? == 2, || format!("χ(K{m},{n}) ≠ 2"))?;
    }
    Ok(format!("{} instances, {paths} canonical paths, {distances} distances", instances.len()))
}

/// Crossing colouring: exact when the oracle finishes, greedy otherwise.
fn crossing_colouring(c: &Complex) -> (Vec<usize>, &'static str) {
    let cross = c.crossing_graph();
    match exact_colouring(&cross, ORACLE_BUDGET) {
        Ok(col) => (col.colours, "exact"),
        Err(_) => (greedy_colour(&cross, &(0..cross.n()).collect::<Vec<_>>()).colours, "greedy"),
    }
}

fn tree_embedding(corpus: &[(String, MedianGraph)]) -> Verdict {
    let mut slowest = Duration::ZERO;
    for (name, g) in corpus {
        let start = Instant::now();
        let c = Complex::new(g.clone()).map_err(|e| e.to_string())?;
        let (colours, method) = crossing_colouring(&c);
        let factors = embed_in_trees(&c, &colours).map_err(|e| format!("{name}: {e}"))?;
        ensure(verify_isometry(&c, &factors).isometric, || format!("{name}: library isometry check fails"))?;
        let dx = all_pairs(g.graph());
        let dt: Vec<Vec<Vec<usize>>> = factors.iter().map(|f| all_pairs(&f.tree)).collect();
        for u in 0..g.n() {
            for v in 0..g.n() {
                let sum: usize = factors.iter().zip(&dt).map(|(f, d)| d[f.vertex_map[u]][f.vertex_map[v]]).sum();
                ensure(sum == dx[u][v], || format!("{name}: d({u},{v}) = {} but trees give {sum}", dx[u][v]))?;
            }
        }
        let expected = if name.starts_with("grid") {
            Some(2)
        } else if name == "simplex C5" {
            Some(3)
        } else {
            None
        };
        if let Some(k) = expected {
            ensure(method == "exact" && factors.len() == k, || {
                format!("{name}: {} factors by {method}", factors.len())
            })?;
        }
        let t = start.elapsed();
        slowest = slowest.max(t);
        ensure(g.n() > 300 || t < EMBEDDING_LIMIT, || format!("{name} took {t:?}"))?;
    }
    Ok(format!("{} instances, slowest {:.2}s", corpus.len(), slowest.as_secs_f64()))
}

fn recubulation_check(name: &str, x: &Complex, alpha: &SimpleGraph) -> Result<(), String> {
    let r = recubulate(x, alpha, DEFAULT_ORIENTATION_BUDGET).map_err(|e| format!("{name}: {e}"))?;
    verify_recubulation(x, alpha, &r.graph, &r.embedding).map_err(|e| format!("{name}: {e}"))?;
    let rc = Complex::new(r.graph.clone()).map_err(|e| e.to_string())?;
    ensure(rc.m() == x.m(), || format!("{name}: {} hyperplanes in R, {} in X", rc.m(), x.m()))?;
    let classes: Vec<BTreeSet<(usize, usize)>> = brute_theta(r.graph.graph()).into_iter().collect();
    let class_of = |a: usize, b: usize| classes.iter().position(|cl| cl.contains(&(a.min(b), a.max(b))));
    let mut map = vec![None; x.m()];
    for h in x.hyperplanes() {
        for &(u, v) in &h.edges {
            let image = class_of(r.embedding[u], r.embedding[v]);
            ensure(image.is_some(), || format!("{name}: edge ({u},{v}) not mapped to an edge"))?;
            ensure(map[h.id].is_none() || map[h.id] == image, || format!("{name}: hyperplane {} splits", h.id))?;
            map[h.id] = image;
        }
    }
    let images: BTreeSet<usize> = map.iter().map(|m| m.unwrap()).collect();
    ensure(images.len() == x.m(), || format!("{name}: hyperplane map is not a bijection"))?;
    let rp = Plain::new(&rc);
    let rid = |cls: usize| -> usize {
        let e = *classes[cls].iter().next().unwrap();
        rc.edge_hyperplane(e.0, e.1).unwrap()
    };
    for a in 0..x.m() {
        for b in a + 1..x.m() {
            let crossing = rp.crosses(rid(map[a].unwrap()), rid(map[b].unwrap()));
            ensure(crossing == alpha.has_edge(a, b), || format!("{name}: crossing of ({a},{b}) differs from Γα"))?;
        }
    }
    let dx = all_pairs(x.graph().graph());
    let allowed = vec![true; r.graph.n()];
    for u in 0..x.n() {
        let dr = bfs_in(r.graph.graph(), r.embedding[u], &allowed);
        for v in 0..x.n() {
            ensure(dr[r.embedding[v]] == dx[u][v], || format!("{name}: d({u},{v}) not preserved"))?;
        }
    }
    let delta = x.graph().graph().max_degree();
    let deg = r.graph.graph().max_degree();
    ensure(deg <= delta * delta + delta, || format!("{name}: degree {deg} exceeds Δ²+Δ"))?;
    Ok(())
}

fn recubulation(corpus: &[(String, MedianGraph)]) -> Verdict {
    let mut runs = 0;
    let p2 = Complex::new(path(2).unwrap()).unwrap();
    let alpha = SimpleGraph::new(2, &[(0, 1)]).unwrap();
    recubulation_check("path 2", &p2, &alpha)?;
    runs += 1;
    for (name, g) in corpus {
        if g.graph().max_degree() > 4 {
            continue;
        }
        let x = Complex::new(g.clone()).map_err(|e| e.to_string())?;
        let contact = x.contact_simple_graph();
        let pointed = pointed_contact_graph(&x, 0).map_err(|e| e.to_string())?.graph();
        for alpha in [x.crossing_graph(), pointed, contact] {
            recubulation_check(name, &x, &alpha)?;
            runs += 1;
        }
    }
    ensure(recubulation_degree_bound(8) == 72, || "Δ²+Δ at Δ = 8 is not 72".into())?;
    Ok(format!("{runs} recubulations verified"))
}

fn counterexample_family() -> Verdict {
    let start = Instant::now();
    let b2 = burling(2, ORACLE_BUDGET).map_err(|e| e.to_string())?;
    let boxes = &b2.boxes;
    let edges: Vec<(usize, usize)> = (0..boxes.len())
        .flat_map(|i| (i + 1..boxes.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            (0..3).all(|a| {
                let (p, q) = (boxes[i].intervals[a], boxes[j].intervals[a]);
                p[0] <= q[1] && q[0] <= p[1]
            })
        })
        .collect();
    let g = SimpleGraph::new(boxes.len(), &edges).unwrap();
    let triangle =
        (0..g.n()).any(|a| g.neighbours(a).iter().any(|&b| g.neighbours(b).iter().any(|&c| g.has_edge(a, c))));
    let omega = if triangle {
        3
    } else if edges.is_empty() {
        1
    } else {
        2
    };
    let chi = brute_chromatic(&g);
    ensure(omega == 2 && chi == 3, || format!("burling(2): ω = {omega}, χ = {chi}"))?;
    ensure(b2.stats.omega == 2 && b2.stats.chi == Some(3), || format!("burling(2) stats {:?}", b2.stats))?;
    let mut detail = vec![format!("burling(2) ω=2 χ=3")];
    for n in [1, 2] {
        let family = burling(n, ORACLE_BUDGET).map_err(|e| e.to_string())?;
        let lifted = lifted_complex(&family).map_err(|e| format!("lifted {n}: {e}"))?;
        let graph = lifted.graph.graph();
        ensure(is_median_graph(graph).is_median() && median_by_structure(graph).is_median(), || {
            format!("lifted {n} is not median")
        })?;
        let delta = (0..graph.n()).map(|v| graph.neighbours(v).len()).max().unwrap();
        ensure(delta <= 8, || format!("lifted {n}: Δ = {delta}"))?;
        let c = Complex::new(lifted.graph.clone()).map_err(|e| e.to_string())?;
        let pointed = pointed_contact_graph(&c, lifted.alpha).map_err(|e| e.to_string())?.graph();
        let clique = pointed.max_clique();
        ensure(
            clique.iter().enumerate().all(|(i, &a)| clique[i + 1..].iter().all(|&b| pointed.has_edge(a, b))),
            || "reported clique is not a clique".into(),
        )?;
        let omega = family.stats.omega;
        ensure(clique.len() == omega + 3, || {
            format!("lifted {n}: pointed clique {} vs ω+3 = {}", clique.len(), omega + 3)
        })?;
        detail.push(format!("lifted {n}: {} vertices Δ={delta} pointed ω={}", graph.n(), clique.len()));
    }
    let x1 = theorem2_family(1, ORACLE_BUDGET).map_err(|e| format!("X1: {e}"))?;
    let xc = Complex::new(x1.graph.clone()).map_err(|e| e.to_string())?;
    let xp = Plain::new(&xc);
    let m = xp.m();
    let mut dim = 0;
    for mask in 1u32..1 << m {
        let set: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        if set.len() > dim && set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| xp.crosses(a, b))) {
            dim = set.len();
        }
    }
    ensure(dim <= 5, || format!("X1 has dimension {dim}"))?;
    let chi = exact_chromatic_number(&xc.crossing_graph(), ORACLE_BUDGET).map_err(|e| e.to_string())?;
    ensure(chi >= 2, || format!("χ(Γ#(X1)) = {chi}"))?;
    let deg = x1.graph.graph().max_degree();
    ensure(deg <= 72, || format!("X1 degree {deg} exceeds 72"))?;
    detail.push(format!("X1: {} vertices dim={dim} χ#={chi} Δ={deg}", x1.graph.n()));
    let t = start.elapsed();
    ensure(t < FAMILY_LIMIT, || format!("took {t:?}"))?;
    detail.push(format!("{:.1}s", t.as_secs_f64()));
    Ok(detail.join(", "))
}

fn structure(raw: &RawEvents) -> EventStructure {
    EventStructure::new(raw.n, &raw.causality, &raw.conflict).unwrap()
}

fn event_structures_check() -> Verdict {
    let mut total = 0;
    let mut degree_two = 0;
    let mut per_size = Vec::new();
    for n in 0..=MAX_EVENTS {
        let all =
            if n == 0 { vec![RawEvents { n: 0, causality: vec![], conflict: vec![] }] } else { event_structures(n) };
        per_size.push(all.len());
        for raw in &all {
            let es = structure(raw);
            let d = domain(&es, DEFAULT_CONFIG_BUDGET).map_err(|e| format!("{raw:?}: {e}"))?;
            ensure(d.graph.n() == configurations(raw).len(), || format!("{raw:?}: configuration count"))?;
            let c = Complex::new(d.graph.clone()).map_err(|e| e.to_string())?;
            let back = from_pointed_complex(&c, 0).map_err(|e| e.to_string())?;
            let ev = &d.hyperplane_event;
            ensure(ev.iter().copied().collect::<BTreeSet<_>>().len() == n && c.m() == n, || {
                format!("{raw:?}: not a bijection")
            })?;
            for a in 0..n {
                for b in 0..n {
                    ensure(
                        back.le(a, b) == es.le(ev[a], ev[b]) && back.in_conflict(a, b) == es.in_conflict(ev[a], ev[b]),
                        || format!("{raw:?}: relations differ at ({a},{b})"),
                    )?;
                }
            }
            round_trip_certificate(&c, 0, DEFAULT_CONFIG_BUDGET).map_err(|e| format!("{raw:?}: {e}"))?;
            let labels = nice_label(&es, LabelMethod::Greedy, DEFAULT_CONFIG_BUDGET, ORACLE_BUDGET)
                .map_err(|e| format!("{raw:?}: {e}"))?;
            ensure(verify_nice(&es, &labels.labels) && brute_is_nice(raw, &labels.labels), || {
                format!("{raw:?}: greedy labels not nice")
            })?;
            if brute_degree(raw) == 2 {
                let exact = nice_label(&es, LabelMethod::Exact, DEFAULT_CONFIG_BUDGET, ORACLE_BUDGET)
                    .map_err(|e| format!("{raw:?}: {e}"))?;
                ensure(brute_is_nice(raw, &exact.labels) && exact.num_labels == 2, || {
                    format!("{raw:?}: degree 2 but {} labels", exact.num_labels)
                })?;
                degree_two += 1;
            }
            total += 1;
        }
    }
    Ok(format!("{total} classes (per size {per_size:?}), {degree_two} of degree 2 with 2 labels"))
}

fn palette_bound_check(corpus: &[(String, MedianGraph)]) -> Verdict {
    let mut sizes = BTreeMap::new();
    for (name, g) in corpus {
        let tc = two_complex(name, g)?;
        let col = colour_contact_graph(&tc, DEFAULT_CHAIN_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        let bound = 2 * 582_613 * (tc.delta() as u128).pow(26);
        ensure(palette_bound(tc.delta()) == bound, || format!("{name}: bound mismatch"))?;
        ensure((col.colouring.num_colours as u128) <= bound, || {
            format!("{name}: {} colours", col.colouring.num_colours)
        })?;
        sizes.insert(name.clone(), (col.colouring.num_colours, tc.delta()));
    }
    for (name, (k, delta)) in &sizes {
        println!("    palette {name}: {k} colours, Δ = {delta}");
    }
    let worst = sizes.values().map(|&(k, _)| k).max().unwrap_or(0);
    Ok(format!("largest palette {worst}"))
}

fn main() {
    let corpus = common::corpus();
    let criteria: Vec<Criterion> = vec![
        ("proper colouring suite", Box::new(|| proper_colouring_suite(&corpus))),
        ("structural invariants", Box::new(|| structural_invariants(&corpus))),
        ("oracle equivalence", Box::new(oracle_equivalence)),
        ("tree embedding", Box::new(|| tree_embedding(&corpus))),
        ("recubulation", Box::new(|| recubulation(&corpus))),
        ("counterexample family", Box::new(counterexample_family)),
        ("event structures", Box::new(event_structures_check)),
        ("palette bound", Box::new(|| palette_bound_check(&corpus))),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
