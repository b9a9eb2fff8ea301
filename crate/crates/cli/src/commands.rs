//! Execution of each verb.

use std::fmt;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use cubeforest::colouring::ball::{colour_contact_graph_default, combing_report};
use cubeforest::colouring::basic::{exact_colouring, first_conflict, greedy_colour, Colouring};
use cubeforest::colouring::check_degree_bound;
use cubeforest::colouring::grading::{grade, max_cluster_diameter};
use cubeforest::constructions::{
    burling, chain, dual_cube_complex, grid, lifted_complex, random_square_complex, recubulate, simplex_graph,
    theorem2_family, verify_recubulation, BoxFamily, RandomParams,
};
use cubeforest::embedding::{embed_in_trees, tau_upper, verify_isometry};
use cubeforest::events::{domain, nice_label, validate, verify_nice, LabelMethod};
use cubeforest::geometry::{contact_graph, pointed_contact_graph, TwoComplex};
use cubeforest::io::{
    parse_edge_list, BoxFamilyJson, ChainJson, ColouringJson, EmbeddingJson, EventStructureJson, FamilyMemberJson,
    GraphJson, RecubulationJson, WallspaceJson,
};
use cubeforest::{is_median_graph, Complex, Error, MedianGraph, SimpleGraph};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Check, Cli, Command, GraphKind, Method, Source};

/// Environment variable holding the default seed of random complexes.
pub const SEED_VAR: &str = "CUBEFOREST_SEED";

/// A failed command with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad usage or unreadable input; exit code 2.
    Input(String),
    /// A verification failed; exit code 1.
    Verify(String),
    /// A budget was exhausted; exit code 3.
    Budget(String),
}

impl Failure {
    /// Process exit code.
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Verify(_) => 1,
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Verify(m) | Failure::Budget(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else if matches!(e, Error::PostconditionFailed(_) | Error::NotMedianAfterLift(_)) {
            Failure::Verify(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read_text(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn check_size(cli: &Cli, n: usize) -> Result<(), Failure> {
    if n > cli.max_vertices {
        return Err(Failure::Budget(format!("{n} vertices exceed --max-vertices {}", cli.max_vertices)));
    }
    Ok(())
}

fn load_median(cli: &Cli, path: &Path) -> Result<MedianGraph, Failure> {
    let g: GraphJson = read_json(path)?;
    check_size(cli, g.vertices.len())?;
    let g = g.to_median_unchecked()?;
    is_median_graph(g.graph()).into_result().map_err(|e| Failure::Input(e.to_string()))?;
    Ok(g)
}

fn load_complex(cli: &Cli, path: &Path) -> Result<Complex, Failure> {
    Ok(Complex::new(load_median(cli, path)?)?)
}

fn target_graph(c: &Complex, kind: GraphKind, pointed: Option<usize>) -> Result<SimpleGraph, Failure> {
    Ok(match kind {
        GraphKind::Contact => c.contact_simple_graph(),
        GraphKind::Crossing => c.crossing_graph(),
        GraphKind::Pointed => {
            let v = pointed.or(c.graph().basepoint()).unwrap_or(0);
            pointed_contact_graph(c, v)?.graph()
        }
    })
}

fn crossing_colours(cli: &Cli, c: &Complex, colouring: Option<&Path>) -> Result<Vec<usize>, Failure> {
    match colouring {
        Some(p) => Ok(read_json::<ColouringJson>(p)?.to_vec(c.m())?),
        None => Ok(tau_upper(c, cli.oracle_budget)?.colouring.colours),
    }
}

/// Runs the parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Build { from, input, rows, cols, n, seed, squares } => {
            build(cli, *from, input.as_deref(), *rows, *cols, *n, *seed, *squares)
        }
        Command::Hyperplanes { input } => {
            let c = load_complex(cli, input)?;
            emit(cli, &to_json(&json!({ "count": c.m(), "hyperplanes": c.hyperplanes() }))?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ContactGraph { input, pointed, dot } => {
            let c = load_complex(cli, input)?;
            let g = match pointed {
                Some(v) => pointed_contact_graph(&c, *v)?,
                None => contact_graph(&c)?,
            };
            emit(cli, &if *dot { g.to_dot() } else { to_json(&g)? })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Colour { input, method, graph, pointed } => colour(cli, input, *method, *graph, *pointed),
        Command::EmbedTrees { input, colouring, out_dir } => {
            let c = load_complex(cli, input)?;
            let colours = crossing_colours(cli, &c, colouring.as_deref())?;
            let factors = embed_in_trees(&c, &colours)?;
            let verdict = verify_isometry(&c, &factors);
            let out = EmbeddingJson::new(&factors, verdict.isometric);
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(dir)?;
                for (i, f) in out.factors.iter().enumerate() {
                    std::fs::write(dir.join(format!("tree-{i}.json")), to_json(f)?)?;
                }
            }
            emit(cli, &to_json(&out)?)?;
            match verdict.counterexample {
                None => Ok(ExitCode::SUCCESS),
                Some((u, v, d, s)) => Err(Failure::Verify(format!("d({u}, {v}) = {d} but the trees give {s}"))),
            }
        }
        Command::Recubulate { input, alpha } => {
            let x = load_complex(cli, input)?;
            let a = read_json::<GraphJson>(alpha)?.to_graph()?;
            let r = recubulate(&x, &a, cli.max_orientations)?;
            check_size(cli, r.graph.n())?;
            let check = verify_recubulation(&x, &a, &r.graph, &r.embedding)?;
            let out = RecubulationJson { graph: GraphJson::from_median(&r.graph), embedding: r.embedding, check };
            emit(cli, &to_json(&out)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Burling { n } => {
            let family = burling(*n, cli.oracle_budget)?;
            emit(cli, &to_json(&family)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Theorem2 { n, chain: wedge } => {
            let text = if *wedge {
                let ch = chain(*n, cli.oracle_budget)?;
                to_json(&ChainJson { graph: GraphJson::from_median(&ch.graph), blocks: ch.blocks })?
            } else {
                to_json(&FamilyMemberJson::new(&theorem2_family(*n, cli.oracle_budget)?))?
            };
            emit(cli, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::NiceLabel { input, method } => {
            let es = read_json::<EventStructureJson>(input)?.to_structure()?;
            if let Some(v) = validate(&es).first() {
                return Err(Failure::Input(format!("invalid event structure: {v:?}")));
            }
            let method = match method {
                Method::Theorem1 => LabelMethod::Theorem1,
                Method::Greedy => LabelMethod::Greedy,
                Method::Exact => LabelMethod::Exact,
            };
            let l = nice_label(&es, method, cli.max_vertices, cli.oracle_budget)?;
            let nice = verify_nice(&es, &l.labels);
            let labels: std::collections::BTreeMap<usize, usize> = l.labels.iter().copied().enumerate().collect();
            emit(
                cli,
                &to_json(&json!({ "method": l.method, "labels": labels, "num_labels": l.num_labels, "nice": nice }))?,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, check, colouring, alpha, recubulation, graph, pointed } => verify(
            cli,
            input,
            *check,
            colouring.as_deref(),
            alpha.as_deref(),
            recubulation.as_deref(),
            *graph,
            *pointed,
        ),
    }
}

#[allow(clippy::too_many_arguments)]
fn build(
    cli: &Cli,
    from: Source,
    input: Option<&Path>,
    rows: usize,
    cols: usize,
    n: usize,
    seed: Option<u64>,
    squares: usize,
) -> Outcome {
    let need = || input.ok_or_else(|| Failure::Input("this source needs an input file".into()));
    let g = match from {
        Source::Edges => {
            let g = parse_edge_list(&read_text(need()?)?)?;
            check_size(cli, g.n())?;
            let g = MedianGraph::from_graph(g, None)?;
            is_median_graph(g.graph()).into_result().map_err(|e| Failure::Input(e.to_string()))?;
            g
        }
        Source::Walls => {
            let w = read_json::<WallspaceJson>(need()?)?.to_wallspace()?;
            dual_cube_complex(&w, cli.max_orientations.min(cli.max_vertices))?.graph
        }
        Source::Simplex => simplex_graph(&read_json::<GraphJson>(need()?)?.to_graph()?)?,
        Source::Boxes => {
            let boxes = read_json::<BoxFamilyJson>(need()?)?.to_boxes()?;
            lifted_complex(&BoxFamily::new(boxes, cli.oracle_budget)?)?.graph
        }
        Source::Events => {
            let es = read_json::<EventStructureJson>(need()?)?.to_structure()?;
            domain(&es, cli.max_vertices)?.graph
        }
        Source::Grid => grid(rows, cols)?,
        Source::Burling => lifted_complex(&burling(n, cli.oracle_budget)?)?.graph,
        Source::Random => {
            let seed = match seed {
                Some(s) => s,
                None => match std::env::var(SEED_VAR) {
                    Ok(s) => s.parse().map_err(|_| Failure::Input(format!("{SEED_VAR} must be an integer")))?,
                    Err(_) => 0,
                },
            };
            random_square_complex(seed, RandomParams { squares, max_vertices: cli.max_vertices })?
        }
    };
    check_size(cli, g.n())?;
    emit(cli, &to_json(&GraphJson::from_median(&g))?)?;
    Ok(ExitCode::SUCCESS)
}

fn colour(cli: &Cli, input: &Path, method: Method, kind: GraphKind, pointed: Option<usize>) -> Outcome {
    let c = load_complex(cli, input)?;
    let delta = c.graph().graph().max_degree();
    let target = target_graph(&c, kind, pointed)?;
    let colouring = match method {
        Method::Theorem1 => colour_contact_graph_default(&TwoComplex::new(c.clone())?)?.colouring,
        Method::Greedy => greedy_colour(&target, &(0..target.n()).collect::<Vec<_>>()),
        Method::Exact => exact_colouring(&target, cli.oracle_budget)?,
    };
    let out = ColouringJson::new(method.name(), &target, &Colouring::from_vec(colouring.colours), Some(delta));
    emit(cli, &to_json(&out)?)?;
    if out.proper {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Failure::Verify("colouring is not proper".into()))
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    cli: &Cli,
    input: &Path,
    check: Check,
    colouring: Option<&Path>,
    alpha: Option<&Path>,
    recubulation: Option<&Path>,
    kind: GraphKind,
    pointed: Option<usize>,
) -> Outcome {
    let (name, ok, detail): (&str, bool, Value) = match check {
        Check::Median => {
            let g: GraphJson = read_json(input)?;
            check_size(cli, g.vertices.len())?;
            let result = is_median_graph(&g.to_graph()?);
            ("median", result.is_median(), serde_json::to_value(&result)?)
        }
        Check::Colouring => {
            let c = load_complex(cli, input)?;
            let path = colouring.ok_or_else(|| Failure::Input("--colouring is required".into()))?;
            let colours = read_json::<ColouringJson>(path)?.to_vec(c.m())?;
            let target = target_graph(&c, kind, pointed)?;
            let conflict = first_conflict(&target, &colours);
            ("colouring", conflict.is_none(), json!({ "conflict": conflict }))
        }
        Check::Isometry => {
            let c = load_complex(cli, input)?;
            let colours = crossing_colours(cli, &c, colouring)?;
            match embed_in_trees(&c, &colours) {
                Ok(factors) => {
                    let v = verify_isometry(&c, &factors);
                    ("isometry", v.isometric, json!({ "k": factors.len(), "counterexample": v.counterexample }))
                }
                Err(e @ (Error::ClassNotLaminar(..) | Error::FactorNotTree(_))) => {
                    ("isometry", false, json!({ "error": e.to_string() }))
                }
                Err(e) => return Err(e.into()),
            }
        }
        Check::ClusterDiameter => {
            let c = load_complex(cli, input)?;
            let gamma = c.contact_simple_graph();
            let d = if gamma.n() == 0 { 0 } else { max_cluster_diameter(&gamma, &grade(&gamma, 0)) };
            ("cluster-diameter", d <= 5, json!({ "max_cluster_diameter": d, "bound": 5 }))
        }
        Check::WeakCombing => {
            let c = load_complex(cli, input)?;
            if !c.is_two_dimensional() {
                return Err(Error::NotTwoDimensional.into());
            }
            let violations = if c.m() == 0 { 0 } else { combing_report(&c).1 };
            ("weak-combing", violations == 0, json!({ "violations": violations }))
        }
        Check::DegreeBound => {
            let c = load_complex(cli, input)?;
            if !c.is_two_dimensional() {
                return Err(Error::NotTwoDimensional.into());
            }
            let bases: Vec<usize> = match pointed {
                Some(v) if v < c.n() => vec![v],
                Some(v) => return Err(Error::UnknownVertex(v).into()),
                None => (0..c.n()).collect(),
            };
            let failing: Vec<usize> = bases.into_iter().filter(|&v| !check_degree_bound(&c, v)).collect();
            ("degree-bound", failing.is_empty(), json!({ "failing_basepoints": failing }))
        }
        Check::Recubulation => {
            let x = load_complex(cli, input)?;
            let path = alpha.ok_or_else(|| Failure::Input("--alpha is required".into()))?;
            let a = read_json::<GraphJson>(path)?.to_graph()?;
            let (graph, embedding) = match recubulation {
                Some(p) => {
                    let r: RecubulationJson = read_json(p)?;
                    (r.graph.to_median_unchecked()?, r.embedding)
                }
                None => {
                    let r = recubulate(&x, &a, cli.max_orientations)?;
                    (r.graph, r.embedding)
                }
            };
            match verify_recubulation(&x, &a, &graph, &embedding) {
                Ok(check) => ("recubulation", true, serde_json::to_value(&check)?),
                Err(e @ Error::PostconditionFailed(_)) => ("recubulation", false, json!({ "error": e.to_string() })),
                Err(e) => return Err(e.into()),
            }
        }
    };
    emit(cli, &to_json(&json!({ "check": name, "ok": ok, "detail": detail }))?)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
