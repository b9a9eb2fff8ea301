//! Command-line arguments.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cubeforest::colouring::basic::DEFAULT_ORACLE_BUDGET;
use cubeforest::constructions::wallspace::DEFAULT_ORIENTATION_BUDGET;

/// Finite CAT(0) cube complexes through their median graphs.
#[derive(Debug, Parser)]
#[command(name = "cubeforest", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Largest accepted vertex count for inputs, outputs and domains.
    #[arg(long, global = true, default_value_t = 20_000)]
    pub max_vertices: usize,
    /// Largest number of consistent orientations explored by wallspace duals.
    #[arg(long, global = true, default_value_t = DEFAULT_ORIENTATION_BUDGET)]
    pub max_orientations: usize,
    /// Search nodes allowed to the exact colouring oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BUDGET)]
    pub oracle_budget: u64,
}

/// One verb per invocation.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a median graph.
    Build {
        /// Kind of source.
        #[arg(long, value_enum)]
        from: Source,
        /// Input file for edges, walls, simplex, boxes and events (`-` for stdin).
        input: Option<PathBuf>,
        /// Grid rows.
        #[arg(long, default_value_t = 1)]
        rows: usize,
        /// Grid columns.
        #[arg(long, default_value_t = 1)]
        cols: usize,
        /// Family index for burling.
        #[arg(short = 'n', long, default_value_t = 1)]
        n: usize,
        /// Seed for random complexes; overrides CUBEFOREST_SEED.
        #[arg(long)]
        seed: Option<u64>,
        /// Squares placed by random complexes.
        #[arg(long, default_value_t = 40)]
        squares: usize,
    },
    /// List hyperplanes with their halfspaces and carriers.
    Hyperplanes {
        /// Graph JSON.
        input: PathBuf,
    },
    /// Contact graph with crossing and osculation labels.
    ContactGraph {
        /// Graph JSON.
        input: PathBuf,
        /// Keep only osculations pointed away from this vertex.
        #[arg(long)]
        pointed: Option<usize>,
        /// Emit Graphviz text instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Colour a graph on the hyperplanes.
    Colour {
        /// Graph JSON.
        input: PathBuf,
        /// Colouring method.
        #[arg(long, value_enum)]
        method: Method,
        /// Graph to colour.
        #[arg(long, value_enum, default_value_t = GraphKind::Contact)]
        graph: GraphKind,
        /// Basepoint of the pointed contact graph; defaults to the graph's basepoint or 0.
        #[arg(long)]
        pointed: Option<usize>,
    },
    /// Embed into a product of trees from a crossing colouring.
    EmbedTrees {
        /// Graph JSON.
        input: PathBuf,
        /// Colouring JSON; an optimal or pipeline colouring is used when absent.
        #[arg(long)]
        colouring: Option<PathBuf>,
        /// Also write each factor to `tree-<i>.json` in this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Recubulate along a graph between the crossing and contact graphs.
    Recubulate {
        /// Graph JSON.
        input: PathBuf,
        /// Graph JSON on hyperplane ids.
        #[arg(long)]
        alpha: PathBuf,
    },
    /// Box family with clique number two and large chromatic number.
    Burling {
        /// Family index.
        #[arg(short = 'n', long)]
        n: usize,
    },
    /// Five-dimensional complex whose crossing graph needs more than `n` colours.
    Theorem2 {
        /// Family index.
        #[arg(short = 'n', long)]
        n: usize,
        /// Wedge members `1..=n` instead.
        #[arg(long)]
        chain: bool,
    },
    /// Nice labeling of an event structure.
    NiceLabel {
        /// Event structure JSON.
        input: PathBuf,
        /// Colouring method.
        #[arg(long, value_enum, default_value_t = Method::Greedy)]
        method: Method,
    },
    /// Check a property; exits with 1 when it fails.
    Verify {
        /// Graph JSON.
        input: PathBuf,
        /// Property to check.
        #[arg(long, value_enum)]
        check: Check,
        /// Colouring JSON for colouring and isometry checks.
        #[arg(long)]
        colouring: Option<PathBuf>,
        /// Graph JSON on hyperplane ids for the recubulation check.
        #[arg(long)]
        alpha: Option<PathBuf>,
        /// Recubulation JSON to check; recomputed when absent.
        #[arg(long)]
        recubulation: Option<PathBuf>,
        /// Graph the colouring is checked on.
        #[arg(long, value_enum, default_value_t = GraphKind::Contact)]
        graph: GraphKind,
        /// Basepoint for pointed checks; all basepoints when absent.
        #[arg(long)]
        pointed: Option<usize>,
    },
}

/// Sources accepted by `build`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    /// Text edge list, one `u v` per line.
    Edges,
    /// Wallspace JSON.
    Walls,
    /// Graph JSON of a graph whose clique complex is taken.
    Simplex,
    /// Box family JSON, lifted.
    Boxes,
    /// Event structure JSON, domain.
    Events,
    /// Square grid.
    Grid,
    /// Lifted complex of a Burling family.
    Burling,
    /// Random union of squares.
    Random,
}

/// Colouring methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Contact-graph pipeline for two-dimensional complexes.
    Theorem1,
    /// Greedy by id.
    Greedy,
    /// Exact oracle.
    Exact,
}

impl Method {
    /// Name used in JSON.
    pub fn name(self) -> &'static str {
        match self {
            Method::Theorem1 => "theorem1",
            Method::Greedy => "greedy",
            Method::Exact => "exact",
        }
    }
}

/// Graphs on the hyperplanes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    /// Crossings and osculations.
    Contact,
    /// Crossings.
    Crossing,
    /// Crossings and pointed osculations.
    Pointed,
}

/// Checks run by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Median graph recognition.
    Median,
    /// Properness of a colouring.
    Colouring,
    /// Tree-product isometry.
    Isometry,
    /// Cluster diameters at most 5.
    ClusterDiameter,
    /// Grandfathers of contacting same-grade hyperplanes coincide or contact.
    WeakCombing,
    /// Maximum degree at most the out-degree plus two.
    DegreeBound,
    /// Recubulation postconditions.
    Recubulation,
}
