//! Structural predicates over vertex subsets.

use crate::error::{Error, Result};
use crate::graph::{complement_components_unchecked, Graph};
use crate::vertex_set::VertexSet;

pub fn is_clique(g: &Graph, set: &VertexSet) -> bool {
    let s = set.as_slice();
    s.iter()
        .enumerate()
        .all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

pub fn is_independent(g: &Graph, set: &VertexSet) -> bool {
    let s = set.as_slice();
    s.iter()
        .enumerate()
        .all(|(i, &u)| s[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// Every member has at least `|S| - s` neighbours inside `S`.
pub fn check_splex(g: &Graph, set: &VertexSet, s: usize) -> bool {
    let need = set.len().saturating_sub(s);
    set.iter()
        .all(|v| set.iter().filter(|&w| g.has_edge(v, w)).count() >= need)
}

/// `G[S]` misses at most `s` edges.
pub fn check_defective_clique(g: &Graph, set: &VertexSet, s: usize) -> bool {
    let k = set.len();
    let pairs = k * k.saturating_sub(1) / 2;
    pairs - g.edges_within(set) <= s
}

/// `|S| >= 2` and the complement of `G[S]` is disconnected.
pub fn is_non_induced_biclique(g: &Graph, set: &VertexSet) -> bool {
    set.len() >= 2 && complement_components_unchecked(g, set.as_slice()).len() >= 2
}

/// `N[S] = V`.
pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    let mut covered = vec![false; g.n()];
    for v in set.iter() {
        covered[v] = true;
        for &w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// True iff no vertex outside `S` can be added while keeping `property`.
///
/// Fails with a contract error when `S` itself does not satisfy `property`.
pub fn check_maximal<P>(g: &Graph, set: &VertexSet, property: P) -> Result<bool>
where
    P: Fn(&Graph, &VertexSet) -> bool,
{
    g.check_set(set)?;
    if !property(g, set) {
        return Err(Error::Contract(format!(
            "check_maximal called on {set}, which does not have the property"
        )));
    }
    Ok(g
        .vertices()
        .filter(|&v| !set.contains(v))
        .all(|v| !property(g, &set.with(v))))
}
