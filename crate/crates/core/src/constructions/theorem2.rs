//! Complexes of dimension at most five and bounded degree whose crossing
//! graphs have large chromatic number.

use serde::{Deserialize, Serialize};

use crate::colouring::basic::exact_chromatic_number;
use crate::complex::Complex;
use crate::constructions::boxes::burling;
use crate::constructions::lifted::lifted_complex;
use crate::constructions::recubulation::{recubulate, verify_recubulation};
use crate::constructions::wallspace::DEFAULT_ORIENTATION_BUDGET;
use crate::error::{Error, Result};
use crate::geometry::{contact_graph, pointed_contact_graph};
use crate::median::MedianGraph;

/// Largest `n` for which [`theorem2_family`] is built.
pub const MAX_THEOREM2_N: usize = 2;

/// Certified statistics of a member of the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyStats {
    /// Number of 0-cubes.
    pub vertices: usize,
    /// Number of hyperplanes.
    pub hyperplanes: usize,
    /// Dimension.
    pub dimension: usize,
    /// Maximum degree.
    pub max_degree: usize,
    /// Clique number of the contact graph.
    pub contact_clique: usize,
    /// Clique number of the crossing graph.
    pub crossing_clique: usize,
    /// Chromatic number of the crossing graph, when the oracle finished.
    pub crossing_chi: Option<usize>,
}

/// The complex `X_n` with its distinguished 0-cubes.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    /// The median graph, pointed at `alpha`.
    pub graph: MedianGraph,
    /// Image of the origin corner of the lifted complex.
    pub alpha: usize,
    /// Image of the opposite corner.
    pub beta: usize,
    /// Certified statistics.
    pub stats: FamilyStats,
}

/// Builds `X_n` by recubulating the lifted complex of `burling(n)` along its
/// contact graph pointed at the origin corner.
///
/// Asserts dimension at most 5, contact clique number at most 72 and, when
/// the chromatic oracle finishes within `oracle_budget`, a crossing graph of
/// chromatic number greater than `n`.
pub fn theorem2_family(n: usize, oracle_budget: u64) -> Result<FamilyMember> {
    if n == 0 || n > MAX_THEOREM2_N {
        return Err(Error::BudgetExceeded(format!("family member {n} is outside 1..={MAX_THEOREM2_N}")));
    }
    let family = burling(n, oracle_budget)?;
    let lifted = lifted_complex(&family)?;
    let x = Complex::new(lifted.graph.clone())?;
    let alpha_graph = pointed_contact_graph(&x, lifted.alpha)?.graph();
    let r = recubulate(&x, &alpha_graph, DEFAULT_ORIENTATION_BUDGET)?;
    let check = verify_recubulation(&x, &alpha_graph, &r.graph, &r.embedding)?;
    let alpha = r.embedding[lifted.alpha];
    let beta = r.embedding[lifted.beta];
    let rc = Complex::new(r.graph.clone())?;
    let crossing = rc.crossing_graph();
    let crossing_chi = match exact_chromatic_number(&crossing, oracle_budget) {
        Ok(c) => Some(c),
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(e),
    };
    let stats = FamilyStats {
        vertices: rc.n(),
        hyperplanes: rc.m(),
        dimension: check.dimension,
        max_degree: check.max_degree,
        contact_clique: contact_graph(&rc)?.graph().clique_number(),
        crossing_clique: crossing.clique_number(),
        crossing_chi,
    };
    if stats.dimension > 5 {
        return Err(Error::PostconditionFailed(format!("dimension {} exceeds 5", stats.dimension)));
    }
    if stats.contact_clique > 72 {
        return Err(Error::PostconditionFailed(format!("contact clique {} exceeds 72", stats.contact_clique)));
    }
    if let Some(chi) = crossing_chi {
        if chi <= n {
            return Err(Error::PostconditionFailed(format!("crossing chromatic number {chi} is at most {n}")));
        }
    }
    Ok(FamilyMember { graph: r.graph, alpha, beta, stats })
}

/// A wedge of family members.
#[derive(Debug, Clone)]
pub struct Chain {
    /// The median graph, pointed at `alpha` of the first member.
    pub graph: MedianGraph,
    /// Vertex ids of each member inside the chain.
    pub blocks: Vec<Vec<usize>>,
}

/// Wedges `X_1, …, X_k`, identifying `beta` of each member with `alpha` of
/// the next.
pub fn chain(k: usize, oracle_budget: u64) -> Result<Chain> {
    if k == 0 || k > MAX_THEOREM2_N {
        return Err(Error::BudgetExceeded(format!("chain length {k} is outside 1..={MAX_THEOREM2_N}")));
    }
    let members = (1..=k).map(|n| theorem2_family(n, oracle_budget)).collect::<Result<Vec<_>>>()?;
    Ok(wedge(&members))
}

/// Wedges members in order, gluing `beta` of each to `alpha` of the next.
pub fn wedge(members: &[FamilyMember]) -> Chain {
    let mut n = 0;
    let mut edges = Vec::new();
    let mut blocks = Vec::new();
    let mut glue: Option<usize> = None;
    for m in members {
        let mut ids = vec![0; m.graph.n()];
        for (v, id) in ids.iter_mut().enumerate() {
            *id = match glue {
                Some(g) if v == m.alpha => g,
                _ => {
                    n += 1;
                    n - 1
                }
            };
        }
        edges.extend(m.graph.edges().into_iter().map(|(u, v)| (ids[u], ids[v])));
        glue = Some(ids[m.beta]);
        blocks.push(ids);
    }
    let base = members.first().map(|m| blocks[0][m.alpha]);
    let graph = MedianGraph::new(n, &edges, base).expect("wedge of median graphs");
    Chain { graph, blocks }
}
