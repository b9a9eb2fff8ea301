//! Potential fathers, iterated imprints, roots, fathers and the order ≺.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::TwoComplex;

/// Father data of one hyperplane relative to its grandfather.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatherData {
    /// The hyperplane `H`.
    pub hyperplane: usize,
    /// Its grandfather `U`.
    pub grandfather: usize,
    /// Sorted `PF(H)`: hyperplanes contacting both `H` and `U`.
    pub potential_fathers: Vec<usize>,
    /// Sorted tree vertices of `U` in the iterated imprint `IJ(H, U)`.
    pub iterated_imprint: Vec<usize>,
    /// Root `b_H`: the vertex of `IJ(H, U)` closest to the root of `U`.
    pub root: usize,
    /// Chosen father `f(H)`.
    pub father: usize,
}

/// Computes father data for every member of `ℛ(U)`.
///
/// The father minimises, in order: the tree distance from the root of `U`
/// to `J(V, U)`, the tree distance in `V` from `J(H, V)` to `J(U, V)`, and
/// the id of `V`.
pub fn fathers(tc: &TwoComplex, u: usize, members: &[usize]) -> Result<Vec<FatherData>> {
    let c = tc.complex();
    let tree_u = tc.tree(u);
    let mut out = Vec::with_capacity(members.len());
    for &h in members {
        let pf: Vec<usize> = c.contact_row(u).intersection(c.contact_row(h)).filter(|&v| v != h && v != u).collect();
        if pf.is_empty() {
            return Err(Error::EmptyPotentialFathers(h));
        }
        let mut union = Vec::new();
        let mut father = None;
        for &v in &pf {
            let on_u = tc.imprint(v, u)?.tree_vertices;
            let tree_v = tc.tree(v);
            let to_root = on_u.iter().map(|&t| tree_u.depth(t)).min().unwrap_or(usize::MAX);
            let spread = tree_v.set_dist(&tc.imprint(h, v)?.tree_vertices, &tc.imprint(u, v)?.tree_vertices);
            let key = (to_root, spread, v);
            if father.is_none_or(|f| key < f) {
                father = Some(key);
            }
            union.extend(on_u);
        }
        union.sort_unstable();
        union.dedup();
        if !tree_u.is_subtree(&union) {
            return Err(Error::PostconditionFailed(format!("iterated imprint of {h} on {u} is not a subtree")));
        }
        let root = tree_u.top(&union).expect("iterated imprint is nonempty");
        out.push(FatherData {
            hyperplane: h,
            grandfather: u,
            potential_fathers: pf,
            iterated_imprint: union,
            root,
            father: father.expect("pf is nonempty").2,
        });
    }
    Ok(out)
}

/// True when `a ≺ b`: the root of `a` lies strictly above the root of `b` on
/// the tree of the grandfather, or the roots coincide and `a` has smaller id.
pub fn precedes(tc: &TwoComplex, a: &FatherData, b: &FatherData) -> bool {
    let tree = tc.tree(a.grandfather);
    if a.root == b.root {
        return a.hyperplane < b.hyperplane;
    }
    let top = tree.root;
    tree.dist(top, a.root) + tree.dist(a.root, b.root) == tree.dist(top, b.root)
}

/// Indices of `data` in a linear extension of `≺`.
pub fn linear_extension(tc: &TwoComplex, data: &[FatherData]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..data.len()).collect();
    order.sort_by_key(|&i| (tc.tree(data[i].grandfather).depth(data[i].root), data[i].hyperplane));
    order
}
