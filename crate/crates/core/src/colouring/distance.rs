//! Hyperplane distance through maximal inseparable separating chains.

use std::collections::{HashSet, VecDeque};

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Default number of explored chain states.
pub const DEFAULT_CHAIN_BUDGET: usize = 200_000;

/// Hyperplanes separating the carrier of `h` from the carrier of `u`.
pub fn separators(c: &Complex, u: usize, h: usize) -> Vec<usize> {
    (0..c.m()).filter(|&w| c.separates(w, h, u)).collect()
}

struct ChainSpace {
    cross: Vec<u128>,
    between: Vec<Vec<u128>>,
    blocked: Vec<Vec<bool>>,
}

impl ChainSpace {
    fn new(c: &Complex, seps: &[usize]) -> Self {
        let k = seps.len();
        let mut cross = vec![0u128; k];
        let mut between = vec![vec![0u128; k]; k];
        let mut blocked = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                if c.crosses(seps[i], seps[j]) {
                    cross[i] |= 1 << j;
                }
                for w in 0..c.m() {
                    if c.separates(w, seps[i], seps[j]) {
                        match seps.binary_search(&w) {
                            Ok(l) => between[i][j] |= 1 << l,
                            Err(_) => blocked[i][j] = true,
                        }
                    }
                }
            }
        }
        ChainSpace { cross, between, blocked }
    }

    /// Smallest valid superset closed under "separates two members".
    fn closure(&self, mut mask: u128) -> Option<u128> {
        loop {
            let mut grown = mask;
            for i in bits(mask) {
                if self.cross[i] & mask != 0 {
                    return None;
                }
                for j in bits(mask) {
                    if self.blocked[i][j] {
                        return None;
                    }
                    grown |= self.between[i][j];
                }
            }
            if grown == mask {
                return Some(mask);
            }
            mask = grown;
        }
    }
}

fn bits(mask: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&i| mask >> i & 1 == 1)
}

/// A smallest maximal chain of pairwise non-crossing separators of `h`
/// from `u` that contains every hyperplane separating two of its members.
///
/// Empty when `h` and `u` contact or coincide.
pub fn minimal_separating_chain(c: &Complex, u: usize, h: usize, budget: usize) -> Result<Vec<usize>> {
    if h == u || c.contacts(h, u) {
        return Ok(Vec::new());
    }
    let seps = separators(c, u, h);
    if seps.is_empty() {
        return Err(Error::PostconditionFailed(format!("disjoint carriers of {h} and {u} have no separator")));
    }
    if seps.len() > 128 {
        return Err(Error::BudgetExceeded(format!("{} separators exceed 128", seps.len())));
    }
    let space = ChainSpace::new(c, &seps);
    let k = seps.len();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..k {
        if let Some(m) = space.closure(1 << i) {
            if seen.insert(m) {
                queue.push_back(m);
            }
        }
    }
    let mut best: Option<u128> = None;
    while let Some(mask) = queue.pop_front() {
        let mut maximal = true;
        for j in 0..k {
            if mask >> j & 1 == 1 {
                continue;
            }
            if let Some(m) = space.closure(mask | 1 << j) {
                maximal = false;
                if seen.insert(m) {
                    if seen.len() > budget {
                        return Err(Error::BudgetExceeded(format!("separating chain search exceeded {budget} states")));
                    }
                    queue.push_back(m);
                }
            }
        }
        if maximal {
            let better = match best {
                None => true,
                Some(b) => (mask.count_ones(), mask) < (b.count_ones(), b),
            };
            if better {
                best = Some(mask);
            }
        }
    }
    let mask = best.expect("a nonempty finite search has a maximal state");
    Ok(bits(mask).map(|i| seps[i]).collect())
}

/// The hyperplane distance `d(h)` relative to `u`.
pub fn hyperplane_distance(c: &Complex, u: usize, h: usize, budget: usize) -> Result<usize> {
    Ok(minimal_separating_chain(c, u, h, budget)?.len())
}

/// Distance between the carriers of `h` and `u`, an upper bound for `d(h)`.
pub fn carrier_distance(c: &Complex, u: usize, h: usize) -> usize {
    let mut best = usize::MAX;
    for x in c.carrier_set(h).ones() {
        for y in c.carrier_set(u).ones() {
            best = best.min(c.dist(x, y));
        }
    }
    best
}
