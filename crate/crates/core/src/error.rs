//! Error type shared by every module of the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by constructions, analyses and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex id outside `0..n` was supplied.
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    /// Malformed input such as loops, duplicate edges or a disconnected graph.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Generator parameters out of range.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// A triple without a unique median.
    #[error("not a median graph: triple ({0}, {1}, {2}) has {3} medians")]
    NotMedian(usize, usize, usize, usize),
    /// The graph failed a structural median test.
    #[error("not a median graph: {0}")]
    NotMedianStructure(String),
    /// A Θ-class does not split the graph into two convex halves.
    #[error("inconsistent split for class {0}: {1}")]
    InconsistentSplit(usize, String),
    /// The gate of a vertex in a set is not unique.
    #[error("vertex {0} has no unique gate in the given set")]
    NotGated(usize),
    /// The clique number of the contact graph differs from the maximum degree.
    #[error("contact clique number {clique} differs from maximum degree {degree}")]
    CliqueDegreeMismatch { clique: usize, degree: usize },
    /// A hyperplane's square adjacency is not a tree.
    #[error("hyperplane {0} is not a tree")]
    NotATree(usize),
    /// Footprint requested for hyperplanes that do not contact.
    #[error("hyperplanes {0} and {1} are not in contact")]
    NotInContact(usize, usize),
    /// More than 2Δ imprints share a tree vertex.
    #[error("imprint load {load} exceeds bound {bound} on hyperplane {host}")]
    DegreeExceeded { host: usize, load: usize, bound: usize },
    /// A hyperplane has no potential father.
    #[error("hyperplane {0} has no potential father")]
    EmptyPotentialFathers(usize),
    /// No osculating separator exists for a hyperplane at positive distance.
    #[error("hyperplane {0} has no separating osculator")]
    NoSeparator(usize),
    /// Several separating osculators at distance at least two.
    #[error("hyperplane {0} has {1} separating osculators at distance {2}")]
    NonUniqueAtDepth2(usize, usize, usize),
    /// The Υ₀ graph of a grandfather has an odd cycle.
    #[error("odd cycle in the bipartite part of the upsilon graph of {0}")]
    OddCycleInUpsilon0(usize),
    /// A colouring assigns equal colours to adjacent nodes.
    #[error("improper colouring: nodes {0} and {1} share colour {2}")]
    ImproperColouring(usize, usize, usize),
    /// The complex has three pairwise crossing hyperplanes.
    #[error("complex is not two-dimensional")]
    NotTwoDimensional,
    /// A cluster of the global grading is wider than the pipeline allows.
    #[error("cluster around {0} has radius {1} > 5")]
    ClusterTooWide(usize, usize),
    /// A search exceeded its configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    /// A colour class of a crossing colouring contains crossing walls.
    #[error("colour class {0} contains crossing hyperplanes {1} and {2}")]
    ClassNotLaminar(usize, usize, usize),
    /// A tree factor is disconnected or has a cycle.
    #[error("factor {0} is not a tree")]
    FactorNotTree(usize),
    /// The chosen graph is not sandwiched between crossing and contact graphs.
    #[error("sandwich condition violated: {0}")]
    SandwichViolated(String),
    /// A construction failed one of its asserted postconditions.
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),
    /// The wallspace dual has too many vertices.
    #[error("orientation budget of {0} exceeded")]
    ExplosionBudget(usize),
    /// The lifted box complex is not median.
    #[error("lifted complex is not median: {0}")]
    NotMedianAfterLift(String),
    /// The configuration domain has too many vertices.
    #[error("configuration budget of {0} exceeded")]
    ConfigExplosion(usize),
}

impl Error {
    /// True for every variant that reports an exhausted budget.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_) | Error::ExplosionBudget(_) | Error::ConfigExplosion(_))
    }
}
