//! Colourings, the greedy baseline, the exact oracle and the verifier.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Default number of search nodes for [`exact_colouring`].
pub const DEFAULT_ORACLE_BUDGET: u64 = 5_000_000;

/// Colour per node of a target graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    /// Colour of node `i`.
    pub colours: Vec<usize>,
    /// Number of distinct colours used.
    pub num_colours: usize,
}

impl Colouring {
    /// Wraps a colour vector, counting distinct colours.
    pub fn from_vec(colours: Vec<usize>) -> Self {
        let mut seen: Vec<usize> = colours.clone();
        seen.sort_unstable();
        seen.dedup();
        Colouring { num_colours: seen.len(), colours }
    }
}

/// First edge whose endpoints share a colour, if any.
pub fn first_conflict(g: &SimpleGraph, colours: &[usize]) -> Option<(usize, usize)> {
    g.edges().into_iter().find(|&(u, v)| colours[u] == colours[v])
}

/// True when `colouring` covers all nodes of `g` and is proper.
pub fn verify_colouring(g: &SimpleGraph, colouring: &Colouring) -> bool {
    colouring.colours.len() == g.n() && first_conflict(g, &colouring.colours).is_none()
}

/// Proper colouring or the violating edge as an error.
pub fn check_colouring(g: &SimpleGraph, colours: &[usize]) -> Result<()> {
    if colours.len() != g.n() {
        return Err(Error::InvalidInput(format!("colouring has {} entries for {} nodes", colours.len(), g.n())));
    }
    match first_conflict(g, colours) {
        Some((u, v)) => Err(Error::ImproperColouring(u, v, colours[u])),
        None => Ok(()),
    }
}

/// Greedy colouring along `order`; nodes missing from `order` follow by id.
pub fn greedy_colour(g: &SimpleGraph, order: &[usize]) -> Colouring {
    let n = g.n();
    let mut colours = vec![usize::MAX; n];
    let mut seq: Vec<usize> = order.iter().copied().filter(|&v| v < n).collect();
    let mut listed = vec![false; n];
    for &v in &seq {
        listed[v] = true;
    }
    seq.extend((0..n).filter(|&v| !listed[v]));
    let mut used = vec![false; n + 1];
    for v in seq {
        if colours[v] != usize::MAX {
            continue;
        }
        for &w in g.neighbours(v) {
            if colours[w] != usize::MAX {
                used[colours[w]] = true;
            }
        }
        let c = (0..).find(|&c| !used[c]).expect("a free colour exists");
        colours[v] = c;
        for &w in g.neighbours(v) {
            if colours[w] != usize::MAX {
                used[colours[w]] = false;
            }
        }
    }
    Colouring::from_vec(colours)
}

/// An optimal colouring by DSATUR branch and bound.
///
/// Fails with [`Error::BudgetExceeded`] after `budget` search nodes.
pub fn exact_colouring(g: &SimpleGraph, budget: u64) -> Result<Colouring> {
    let n = g.n();
    if n == 0 {
        return Ok(Colouring { colours: Vec::new(), num_colours: 0 });
    }
    let clique = g.max_clique();
    let order: Vec<usize> = {
        let mut o: Vec<usize> = (0..n).collect();
        o.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        o
    };
    let mut best = greedy_colour(g, &order);
    if best.num_colours > clique.len() {
        let mut search = Search {
            g,
            colours: vec![usize::MAX; n],
            best_count: best.num_colours,
            best: best.colours.clone(),
            nodes: 0,
            budget,
            lower: clique.len(),
        };
        for (c, &v) in clique.iter().enumerate() {
            search.colours[v] = c;
        }
        search.run(clique.len(), clique.len())?;
        best = Colouring::from_vec(search.best);
    }
    Ok(best)
}

/// Chromatic number via [`exact_colouring`].
pub fn exact_chromatic_number(g: &SimpleGraph, budget: u64) -> Result<usize> {
    Ok(exact_colouring(g, budget)?.num_colours)
}

struct Search<'a> {
    g: &'a SimpleGraph,
    colours: Vec<usize>,
    best_count: usize,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    lower: usize,
}

impl Search<'_> {
    fn run(&mut self, coloured: usize, used: usize) -> Result<bool> {
        if self.best_count == self.lower {
            return Ok(true);
        }
        if coloured == self.g.n() {
            if used < self.best_count {
                self.best_count = used;
                self.best = self.colours.clone();
            }
            return Ok(self.best_count == self.lower);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!("exact colouring exceeded {} search nodes", self.budget)));
        }
        let v = self.pick();
        let mut forbidden = vec![false; used + 1];
        for &w in self.g.neighbours(v) {
            let c = self.colours[w];
            if c != usize::MAX {
                forbidden[c] = true;
            }
        }
        for c in 0..=used {
            if forbidden[c] {
                continue;
            }
            let next_used = used.max(c + 1);
            if next_used >= self.best_count {
                break;
            }
            self.colours[v] = c;
            let done = self.run(coloured + 1, next_used)?;
            self.colours[v] = usize::MAX;
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn pick(&self) -> usize {
        let mut best = (0, 0, usize::MAX);
        let mut choice = usize::MAX;
        for v in 0..self.g.n() {
            if self.colours[v] != usize::MAX {
                continue;
            }
            let mut seen: Vec<usize> =
                self.g.neighbours(v).iter().map(|&w| self.colours[w]).filter(|&c| c != usize::MAX).collect();
            seen.sort_unstable();
            seen.dedup();
            let key = (seen.len(), self.g.degree(v), usize::MAX - v);
            if choice == usize::MAX || key > best {
                best = key;
                choice = v;
            }
        }
        choice
    }
}
